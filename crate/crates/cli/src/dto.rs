//! Serializable mirrors of core operators and spinors.

use glmix::weyl::DiffMonomial;
use glmix::{Coeff, MatrixDiffOp, PolySpinor, Polynomial, ScalarDiffOp};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDto {
    pub x: Vec<u32>,
    pub d: Vec<u32>,
    pub coeff: Coeff,
}

/// `entries[row][col]` lists the normal-ordered terms of one entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorDto {
    pub dim: usize,
    pub nvars: usize,
    pub entries: Vec<Vec<Vec<TermDto>>>,
}

impl From<&MatrixDiffOp> for OperatorDto {
    fn from(op: &MatrixDiffOp) -> Self {
        let dim = op.dim();
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        op.entry(i, j)
                            .terms()
                            .map(|(m, c)| TermDto { x: m.xpow.clone(), d: m.dpow.clone(), coeff: c.clone() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        OperatorDto { dim, nvars: op.nvars(), entries }
    }
}

impl TryFrom<&OperatorDto> for MatrixDiffOp {
    type Error = glmix::Error;

    fn try_from(dto: &OperatorDto) -> glmix::Result<Self> {
        if dto.entries.len() != dto.dim || dto.entries.iter().any(|r| r.len() != dto.dim) {
            return Err(glmix::Error::Invalid("operator entries do not form a square matrix".into()));
        }
        let mut entries = Vec::with_capacity(dto.dim * dto.dim);
        for row in &dto.entries {
            for cell in row {
                if cell.iter().any(|t| t.x.len() != dto.nvars || t.d.len() != dto.nvars) {
                    return Err(glmix::Error::Invalid("term arity differs from nvars".into()));
                }
                entries.push(ScalarDiffOp::from_terms(
                    dto.nvars,
                    cell.iter().map(|t| (DiffMonomial { xpow: t.x.clone(), dpow: t.d.clone() }, t.coeff.clone())),
                ));
            }
        }
        MatrixDiffOp::from_entries(dto.dim, dto.nvars, entries)
    }
}

/// Components as lists of `(exponents, coefficient)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinorDto {
    pub nvars: usize,
    pub components: Vec<Vec<(Vec<u32>, Coeff)>>,
}

impl From<&PolySpinor> for SpinorDto {
    fn from(v: &PolySpinor) -> Self {
        SpinorDto {
            nvars: v.nvars(),
            components: v
                .components()
                .iter()
                .map(|p| p.terms().map(|(e, c)| (e.clone(), c.clone())).collect())
                .collect(),
        }
    }
}

impl From<&SpinorDto> for PolySpinor {
    fn from(dto: &SpinorDto) -> Self {
        PolySpinor::new(
            dto.nvars,
            dto.components.iter().map(|c| Polynomial::from_terms(dto.nvars, c.iter().cloned())).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use glmix::reps::{build_gl_np1, RepSpec};

    #[test]
    fn generators_round_trip() {
        let g = build_gl_np1(&RepSpec::gl3(3).unwrap());
        for (_, op) in g.iter() {
            let dto = OperatorDto::from(op);
            let text = serde_json::to_string(&dto).unwrap();
            let back: OperatorDto = serde_json::from_str(&text).unwrap();
            assert_eq!(&MatrixDiffOp::try_from(&back).unwrap(), op);
        }
    }

    #[test]
    fn ragged_entries_are_rejected() {
        let dto = OperatorDto { dim: 2, nvars: 2, entries: vec![vec![vec![]]] };
        assert!(MatrixDiffOp::try_from(&dto).is_err());
    }

    #[test]
    fn sqrt2_is_an_exact_pair() {
        let v = PolySpinor::new(2, vec![Polynomial::constant(2, Coeff::sqrt2())]);
        let text = serde_json::to_string(&SpinorDto::from(&v)).unwrap();
        assert!(text.contains(r#"["0","1"]"#), "{text}");
        let back: SpinorDto = serde_json::from_str(&text).unwrap();
        assert_eq!(PolySpinor::from(&back), v);
    }
}
