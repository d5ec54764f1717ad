//! Text renderings of multi-degree tables.

use super::collect::MultiDegreeTable;
use super::tables::{describe, recognize};

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn r(x: num_rational::Rational64) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `m1,n1,m2,n2,coefficient`, one row per degree.
pub fn to_csv(t: &MultiDegreeTable) -> String {
    let mut out = String::from("m1,n1,m2,n2,coefficient\n");
    for (d, c) in &t.entries {
        out.push_str(&format!("{},{},{},{},{}\n", r(d.m1), r(d.n1), r(d.m2), r(d.n2), csv_field(&describe(c))));
    }
    out
}

/// Tabular rows `$((m1,n1),(m2,n2))$ & $coefficient$ \\`.
pub fn to_latex(t: &MultiDegreeTable) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\nmulti-degree & coefficient \\\\\n\\hline\n");
    for (d, c) in &t.entries {
        let coeff = match recognize(c) {
            Some(e) => e.latex(),
            None => format!("\\text{{{c}}}"),
        };
        out.push_str(&format!("${d}$ & ${coeff}$ \\\\\n"));
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn to_text(t: &MultiDegreeTable) -> String {
    let width = t.degrees().map(|d| d.to_string().len()).max().unwrap_or(0);
    t.entries.iter().map(|(d, c)| format!("{:<width$}  {}\n", d.to_string(), describe(c))).collect()
}
