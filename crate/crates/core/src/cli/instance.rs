//! Instance files.
//!
//! ```text
//! # comment
//! domain: zp:2
//! task: saturate-vx
//! degree-bound: 6
//! max-iter: 64
//! verify: true
//! vectors:
//! 2
//! X
//! ```
//!
//! Header keys are optional except where the command line does not supply
//! them. Vector lines are kept as text until the domain is known.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyvec::PolyVec;
use crate::valuation::DomainSpec;

use super::expr::parse_vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    SaturateFree,
    SaturateVx,
    Syzygy,
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::SaturateFree => "saturate-free",
            Task::SaturateVx => "saturate-vx",
            Task::Syzygy => "syzygy",
        })
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "saturate-free" => Ok(Task::SaturateFree),
            "saturate-vx" => Ok(Task::SaturateVx),
            "syzygy" => Ok(Task::Syzygy),
            other => Err(format!(
                "unknown task `{other}` (expected saturate-free, saturate-vx or syzygy)"
            )),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Instance {
    pub domain: Option<DomainSpec>,
    pub task: Option<Task>,
    pub degree_bound: Option<usize>,
    pub max_iter: Option<usize>,
    pub verify: bool,
    /// `(line number, text)` of each vector line.
    pub vectors: Vec<(usize, String)>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

impl Instance {
    pub fn parse(text: &str) -> Result<Instance> {
        let mut inst = Instance::default();
        let mut in_vectors = false;
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            if in_vectors {
                inst.vectors.push((line_no, line.to_string()));
                continue;
            }
            let parse_err = |column: usize, message: String| Error::Parse {
                line: line_no,
                column,
                message,
            };
            let Some((key, value)) = line.split_once(':') else {
                return Err(parse_err(1, "expected `key: value`".into()));
            };
            let value_col = key.chars().count() + 2 + (value.len() - value.trim_start().len());
            let value = value.trim();
            match key.trim() {
                "domain" => inst.domain = Some(value.parse()?),
                "task" => inst.task = Some(value.parse().map_err(|m| parse_err(value_col, m))?),
                "degree-bound" => {
                    inst.degree_bound = Some(
                        value
                            .parse()
                            .map_err(|_| parse_err(value_col, format!("invalid degree bound `{value}`")))?,
                    )
                }
                "max-iter" => {
                    inst.max_iter = Some(
                        value
                            .parse()
                            .map_err(|_| parse_err(value_col, format!("invalid iteration cap `{value}`")))?,
                    )
                }
                "verify" => {
                    inst.verify = match value {
                        "true" | "yes" | "1" => true,
                        "false" | "no" | "0" => false,
                        _ => return Err(parse_err(value_col, format!("invalid flag `{value}`"))),
                    }
                }
                "vectors" => {
                    if !value.is_empty() {
                        return Err(parse_err(value_col, "vectors start on the next line".into()));
                    }
                    in_vectors = true;
                }
                other => {
                    let col = line.len() - line.trim_start().len() + 1;
                    return Err(parse_err(col, format!("unknown key `{other}`")));
                }
            }
        }
        Ok(inst)
    }

    /// Parses the vector lines over `f`; all must have the same length.
    pub fn vectors_over<F: Field>(&self, f: &F) -> Result<Vec<PolyVec<F::Elem>>> {
        let mut out: Vec<PolyVec<F::Elem>> = Vec::with_capacity(self.vectors.len());
        for (line, text) in &self.vectors {
            let v = parse_vector(f, text, *line)?;
            if let Some(first) = out.first() {
                if first.len() != v.len() {
                    return Err(Error::Parse {
                        line: *line,
                        column: 1,
                        message: format!("expected {} components, found {}", first.len(), v.len()),
                    });
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

/// Renders an instance-style document listing `vectors`.
pub fn render_document<F: Field>(
    f: &F,
    domain: DomainSpec,
    task: Task,
    comment: &str,
    vectors: &[PolyVec<F::Elem>],
) -> String {
    let mut out = String::new();
    for line in comment.lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("domain: {domain}\ntask: {task}\nvectors:\n"));
    for v in vectors {
        out.push_str(&v.render(f));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::Zp;

    #[test]
    fn parses_header_and_vectors() {
        let text = "# example\ndomain: zp:2\ntask: saturate-vx  # inline\nmax-iter: 8\nverify: yes\nvectors:\n2\n\nX # shift\n";
        let inst = Instance::parse(text).unwrap();
        assert_eq!(inst.domain, Some(DomainSpec::Zp { p: 2 }));
        assert_eq!(inst.task, Some(Task::SaturateVx));
        assert_eq!(inst.max_iter, Some(8));
        assert!(inst.verify);
        assert_eq!(inst.vectors, vec![(7, "2".to_string()), (9, "X ".to_string())]);
        let d = Zp::new(2).unwrap();
        let vs = inst.vectors_over(&d).unwrap();
        assert_eq!(vs, vec![PolyVec::from_ints(&d, &[&[2]]), PolyVec::from_ints(&d, &[&[0, 1]])]);
    }

    #[test]
    fn header_errors() {
        assert!(matches!(
            Instance::parse("task: fold\n"),
            Err(Error::Parse { line: 1, column: 7, .. })
        ));
        assert!(matches!(Instance::parse("\nnonsense\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Instance::parse("colour: red\n"), Err(Error::Parse { line: 1, column: 1, .. })));
        assert_eq!(Instance::parse("domain: zp:6\n"), Err(Error::NotPrime(6)));
        assert!(matches!(Instance::parse("max-iter: -1\n"), Err(Error::Parse { column: 11, .. })));
    }

    #[test]
    fn mismatched_lengths() {
        let inst = Instance::parse("vectors:\n(1, 2)\n3\n").unwrap();
        let d = Zp::new(3).unwrap();
        assert!(matches!(inst.vectors_over(&d), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn document_round_trip() {
        let d = Zp::new(2).unwrap();
        let vs = vec![
            PolyVec::from_ints(&d, &[&[-2], &[0, 1]]),
            PolyVec::from_ints(&d, &[&[1, 0, 3], &[]]),
        ];
        let doc = render_document(&d, DomainSpec::Zp { p: 2 }, Task::Syzygy, "generators", &vs);
        let inst = Instance::parse(&doc).unwrap();
        assert_eq!(inst.task, Some(Task::Syzygy));
        assert_eq!(inst.vectors_over(&d).unwrap(), vs);
    }
}
