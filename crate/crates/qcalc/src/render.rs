//! Table generation and CSV/LaTeX/JSON/text emitters for the special-number
//! families.

use crate::bernoulli::BernoulliCache;
use crate::error::{QError, Result};
use crate::qcore::gauss_binom;
use crate::stirling::{s1_gen, s2_explicit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Stirling1,
    Stirling2,
    Beta,
    Qbinom,
}

impl TableKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "stirling1" => Ok(TableKind::Stirling1),
            "stirling2" => Ok(TableKind::Stirling2),
            "beta" => Ok(TableKind::Beta),
            "qbinom" => Ok(TableKind::Qbinom),
            other => Err(QError::InvalidArgument(format!(
                "unknown table kind '{other}' (expected stirling1|stirling2|beta|qbinom)"
            ))),
        }
    }
}

/// Row-major table of rendered exact values; row n holds entries k = 0..n
/// (a single entry for beta).
pub fn table(kind: TableKind, max_n: u32) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    match kind {
        TableKind::Stirling1 => {
            for n in 0..=max_n {
                rows.push(s1_gen(n).iter().map(|p| p.render()).collect());
            }
        }
        TableKind::Stirling2 => {
            for n in 0..=max_n {
                rows.push((0..=n).map(|k| s2_explicit(n, k).render()).collect());
            }
        }
        TableKind::Beta => {
            let cache = BernoulliCache::new();
            for n in 0..=max_n {
                rows.push(vec![cache.beta(n).render()]);
            }
        }
        TableKind::Qbinom => {
            for n in 0..=max_n {
                rows.push((0..=n).map(|k| gauss_binom(n, k as i64).render()).collect());
            }
        }
    }
    rows
}

pub fn to_csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[Vec<String>]) -> String {
    serde_json::to_string_pretty(rows).expect("string table serializes") + "\n"
}

pub fn to_text(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for (n, row) in rows.iter().enumerate() {
        out.push_str(&format!("n={n}: {}\n", row.join("  |  ")));
    }
    out
}

/// Standalone LaTeX document with one tabular; values are math-mode safe
/// (only digits, q, +, -, /, ^ appear).
pub fn to_latex(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(1);
    let mut out = String::from(
        "\\documentclass{article}\n\\begin{document}\n\\begin{tabular}{l",
    );
    for _ in 0..width {
        out.push('l');
    }
    out.push_str("}\n");
    for (n, row) in rows.iter().enumerate() {
        let mut cells: Vec<String> = vec![format!("$n={n}$")];
        cells.extend(row.iter().map(|c| format!("${}$", c.replace('^', "^{") + "")));
        // close every brace opened by the exponent rewrite
        let cells: Vec<String> = cells
            .iter()
            .map(|c| {
                let opens = c.matches("^{").count();
                let mut fixed = String::new();
                let mut rest = c.as_str();
                // rewrite q^{d to q^{d} by closing after the digit run
                for _ in 0..opens {
                    let i = rest.find("^{").unwrap();
                    fixed.push_str(&rest[..i + 2]);
                    rest = &rest[i + 2..];
                    let d = rest
                        .find(|ch: char| !ch.is_ascii_digit())
                        .unwrap_or(rest.len());
                    fixed.push_str(&rest[..d]);
                    fixed.push('}');
                    rest = &rest[d..];
                }
                fixed.push_str(rest);
                fixed
            })
            .collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n\\end{document}\n");
    out
}
