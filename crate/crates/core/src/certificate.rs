//! The line-oriented certificate format (frozen):
//!
//! ```text
//! ramsey-certificate v1
//! claim no-mono <pattern-expr>
//! n <N>
//! blue <i-j> <i-j> ...
//! ```
//!
//! All edges not listed are red, so a no-mono certificate encodes a
//! complete coloring and is independently re-verifiable. Arrow claims
//! (`claim arrow <pattern-expr> <N>`) carry search statistics instead of
//! an edge list and are marked machine-assisted.

use crate::embed::contains_mono_pattern;
use crate::graph::{Color, TwoColoring};
use crate::pattern::PatternSpec;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("order mismatch: {0}")]
    OrderMismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A complete coloring of `K_n` claimed to contain no monochromatic
    /// copy of the pattern in either color.
    NoMono {
        pattern: PatternSpec,
        coloring: TwoColoring,
    },
    /// A machine-assisted claim that every coloring of `K_order` contains
    /// a monochromatic copy.
    Arrow {
        pattern: PatternSpec,
        order: usize,
        nodes: u64,
    },
}

impl Certificate {
    pub fn no_mono(pattern: PatternSpec, coloring: TwoColoring) -> Certificate {
        Certificate::NoMono { pattern, coloring }
    }

    /// Serializes; the output is canonical (emit ∘ parse ∘ emit is the
    /// identity byte-for-byte).
    pub fn emit(&self) -> String {
        let mut out = String::from("ramsey-certificate v1\n");
        match self {
            Certificate::NoMono { pattern, coloring } => {
                writeln!(out, "claim no-mono {pattern}").unwrap();
                writeln!(out, "n {}", coloring.n_vertices()).unwrap();
                let edges: Vec<String> = coloring
                    .edges_of(Color::Blue)
                    .iter()
                    .map(|e| e.to_string())
                    .collect();
                writeln!(out, "blue {}", edges.join(" ")).unwrap();
            }
            Certificate::Arrow {
                pattern,
                order,
                nodes,
            } => {
                writeln!(out, "claim arrow {pattern} {order}").unwrap();
                writeln!(out, "n {order}").unwrap();
                writeln!(out, "nodes {nodes}").unwrap();
                writeln!(out, "machine-assisted").unwrap();
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Certificate, CertificateError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| CertificateError::Malformed("empty file".into()))?;
        if header != "ramsey-certificate v1" {
            return Err(CertificateError::Malformed(format!(
                "unexpected header `{header}`"
            )));
        }
        let claim_line = lines
            .next()
            .ok_or_else(|| CertificateError::Malformed("missing claim line".into()))?;
        let n_line = lines
            .next()
            .ok_or_else(|| CertificateError::Malformed("missing order line".into()))?;
        let order: usize = n_line
            .strip_prefix("n ")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| CertificateError::Malformed(format!("bad order line `{n_line}`")))?;

        if let Some(rest) = claim_line.strip_prefix("claim no-mono ") {
            let pattern = PatternSpec::parse(rest)
                .map_err(|e| CertificateError::Malformed(format!("bad pattern: {e}")))?;
            let blue_line = lines
                .next()
                .ok_or_else(|| CertificateError::Malformed("missing blue line".into()))?;
            let body = blue_line.strip_prefix("blue").ok_or_else(|| {
                CertificateError::Malformed(format!("bad blue line `{blue_line}`"))
            })?;
            let mut coloring = TwoColoring::new(order);
            for token in body.split_whitespace() {
                let (a, b) = token
                    .split_once('-')
                    .ok_or_else(|| CertificateError::Malformed(format!("bad edge `{token}`")))?;
                let (i, j): (usize, usize) = match (a.parse(), b.parse()) {
                    (Ok(i), Ok(j)) => (i, j),
                    _ => return Err(CertificateError::Malformed(format!("bad edge `{token}`"))),
                };
                if i >= j {
                    return Err(CertificateError::Malformed(format!(
                        "edge `{token}` must satisfy i < j"
                    )));
                }
                if j >= order {
                    return Err(CertificateError::OrderMismatch(format!(
                        "edge `{token}` references a vertex outside K_{order}"
                    )));
                }
                if coloring.color_of(i, j).is_some() {
                    return Err(CertificateError::Malformed(format!(
                        "edge `{token}` listed twice"
                    )));
                }
                coloring.set(i, j, Color::Blue);
            }
            // non-listed edges are red
            for j in 1..order {
                for i in 0..j {
                    if coloring.color_of(i, j).is_none() {
                        coloring.set(i, j, Color::Red);
                    }
                }
            }
            if lines.next().is_some() {
                return Err(CertificateError::Malformed("trailing content".into()));
            }
            Ok(Certificate::NoMono { pattern, coloring })
        } else if let Some(rest) = claim_line.strip_prefix("claim arrow ") {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            if tokens.len() < 2 {
                return Err(CertificateError::Malformed("short arrow claim".into()));
            }
            let claim_order: usize = tokens[tokens.len() - 1]
                .parse()
                .map_err(|_| CertificateError::Malformed("bad arrow order".into()))?;
            let pattern = PatternSpec::parse_tokens(&tokens[..tokens.len() - 1])
                .map_err(|e| CertificateError::Malformed(format!("bad pattern: {e}")))?;
            if claim_order != order {
                return Err(CertificateError::OrderMismatch(format!(
                    "claim says K_{claim_order} but order line says {order}"
                )));
            }
            let nodes_line = lines
                .next()
                .ok_or_else(|| CertificateError::Malformed("missing nodes line".into()))?;
            let nodes: u64 = nodes_line
                .strip_prefix("nodes ")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| {
                    CertificateError::Malformed(format!("bad nodes line `{nodes_line}`"))
                })?;
            match lines.next() {
                Some("machine-assisted") => {}
                other => {
                    return Err(CertificateError::Malformed(format!(
                        "expected machine-assisted marker, got {other:?}"
                    )))
                }
            }
            if lines.next().is_some() {
                return Err(CertificateError::Malformed("trailing content".into()));
            }
            Ok(Certificate::Arrow {
                pattern,
                order,
                nodes,
            })
        } else {
            Err(CertificateError::Malformed(format!(
                "unknown claim `{claim_line}`"
            )))
        }
    }
}

/// Result of independent re-verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    /// The coloring was re-checked and avoids the pattern in both colors.
    Valid,
    /// The content refutes the claim; the message names the violation.
    Invalid(String),
    /// Arrow claims record an exhaustive search; they are structurally
    /// sound but not independently re-verifiable from the file alone.
    MachineAssisted,
}

/// Re-checks a certificate's claim from its content, independently of the
/// search engine.
pub fn verify(cert: &Certificate) -> VerifyOutcome {
    match cert {
        Certificate::NoMono { pattern, coloring } => {
            for color in [Color::Blue, Color::Red] {
                if contains_mono_pattern(coloring, color, pattern) {
                    return VerifyOutcome::Invalid(format!(
                        "claim mismatch: coloring contains a {color} copy of `{pattern}`"
                    ));
                }
            }
            VerifyOutcome::Valid
        }
        Certificate::Arrow { .. } => VerifyOutcome::MachineAssisted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::split_clique_coloring;

    #[test]
    fn no_mono_roundtrip_byte_identical() {
        let cert = Certificate::no_mono(
            PatternSpec::bistar(2, 2).unwrap(),
            split_clique_coloring(5, 2),
        );
        let text = cert.emit();
        let parsed = Certificate::parse(&text).unwrap();
        assert_eq!(parsed.emit(), text);
        assert_eq!(verify(&parsed), VerifyOutcome::Valid);
    }

    #[test]
    fn arrow_roundtrip() {
        let cert = Certificate::Arrow {
            pattern: PatternSpec::star(3).unwrap(),
            order: 6,
            nodes: 12345,
        };
        let text = cert.emit();
        assert_eq!(Certificate::parse(&text).unwrap().emit(), text);
        assert_eq!(verify(&cert), VerifyOutcome::MachineAssisted);
    }

    #[test]
    fn flipped_edge_is_judged_on_content() {
        // flip one cross edge of split_clique(5,2) to blue: vertex 0 gains
        // blue degree 5 and a blue B(2,2) appears
        let mut c = split_clique_coloring(5, 2);
        c.unset(0, 5);
        c.set(0, 5, Color::Blue);
        let cert = Certificate::no_mono(PatternSpec::bistar(2, 2).unwrap(), c);
        let reparsed = Certificate::parse(&cert.emit()).unwrap();
        assert!(matches!(verify(&reparsed), VerifyOutcome::Invalid(_)));
    }

    #[test]
    fn malformed_files() {
        assert!(matches!(
            Certificate::parse("ramsey-certificate v1\nclaim no-mono star 3\n"),
            Err(CertificateError::Malformed(_))
        ));
        assert!(matches!(
            Certificate::parse("nonsense"),
            Err(CertificateError::Malformed(_))
        ));
        // truncated: missing blue line entirely
        assert!(Certificate::parse("ramsey-certificate v1\nclaim no-mono star 3\nn 5").is_err());
        // vertex out of range
        let bad = "ramsey-certificate v1\nclaim no-mono star 2\nn 3\nblue 0-5\n";
        assert!(matches!(
            Certificate::parse(bad),
            Err(CertificateError::OrderMismatch(_))
        ));
    }
}
