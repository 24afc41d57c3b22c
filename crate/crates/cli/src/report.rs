use serde::Serialize;

use crate::Format;

/// Envelope shared by every report.
#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: &'static str,
    pub input: String,
    pub field: String,
    pub seed: u64,
    pub max_degree: usize,
    #[serde(flatten)]
    pub body: T,
}

pub struct Output {
    pub text: String,
    pub verified: bool,
}

pub fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

pub fn joined(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

/// `n,dim` rows.
pub fn dims_csv(v: &[usize]) -> String {
    let mut s = String::from("n,dim\n");
    for (n, d) in v.iter().enumerate() {
        s += &format!("{n},{d}\n");
    }
    s
}

pub fn dims_output<T: Serialize>(report: &Report<T>, dims: &[usize], format: Format) -> Output {
    let text = match format {
        Format::Json => json(report),
        Format::Csv => dims_csv(dims),
        Format::Text => format!("{}\n", joined(dims)),
    };
    Output { text, verified: true }
}

/// Columns `p` left to right, rows `q` from the top degree down.
pub fn bigraded_table(dims: &[Vec<usize>]) -> String {
    let n = dims.len().saturating_sub(1);
    let mut s = String::from("q\\p");
    for p in 0..=n {
        s += &format!("{p:>4}");
    }
    s.push('\n');
    for q in (0..=n).rev() {
        s += &format!("{q:>3}");
        for col in dims {
            match col.get(q) {
                Some(d) => s += &format!("{d:>4}"),
                None => s += "   .",
            }
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout() {
        let t = bigraded_table(&[vec![1, 0], vec![1]]);
        assert_eq!(t, "q\\p   0   1\n  1   0   .\n  0   1   1\n");
    }
}
