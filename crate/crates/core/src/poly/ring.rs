use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FiniteField;
use crate::lattice::rank;

use super::{parse, Monomial, Polynomial};

/// Polynomial ring over a finite field, optionally graded by a `d×r` matrix
/// β of non-negative integers (column `j` is the degree of variable `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    field: Arc<FiniteField>,
    names: Vec<String>,
    beta: Option<Vec<Vec<i64>>>,
}

impl Ring {
    /// Graded ring with variables `x_1..x_r`.
    pub fn graded(field: Arc<FiniteField>, beta: Vec<Vec<i64>>) -> Result<Arc<Ring>> {
        let r = beta.first().map_or(0, |row| row.len());
        let names = (1..=r).map(|i| format!("x_{i}")).collect();
        Self::graded_with_names(field, names, beta)
    }

    pub fn graded_with_names(
        field: Arc<FiniteField>,
        names: Vec<String>,
        beta: Vec<Vec<i64>>,
    ) -> Result<Arc<Ring>> {
        let r = names.len();
        if beta.is_empty() {
            return Err(Error::BadGrading("β has no rows".into()));
        }
        if beta.iter().any(|row| row.len() != r) {
            return Err(Error::BadGrading(format!(
                "every row of β must have {r} entries"
            )));
        }
        if beta.iter().flatten().any(|&b| b < 0) {
            return Err(Error::BadGrading("β has a negative entry".into()));
        }
        if let Some(j) = (0..r).find(|&j| beta.iter().all(|row| row[j] == 0)) {
            return Err(Error::BadGrading(format!("column {} of β is zero", j + 1)));
        }
        let d = beta.len();
        let rk = rank(&beta);
        if rk != d {
            return Err(Error::RankDeficient {
                rank: rk,
                expected: d,
            });
        }
        Ok(Arc::new(Ring {
            field,
            names,
            beta: Some(beta),
        }))
    }

    pub fn ungraded(field: Arc<FiniteField>, names: Vec<String>) -> Arc<Ring> {
        Arc::new(Ring {
            field,
            names,
            beta: None,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn beta(&self) -> Option<&[Vec<i64>]> {
        self.beta.as_deref()
    }

    /// Number of grading rows `d` (0 when ungraded).
    pub fn grading_rank(&self) -> usize {
        self.beta.as_ref().map_or(0, |b| b.len())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parse(self: &Arc<Self>, src: &str) -> Result<Polynomial> {
        parse::parse_polynomial(src, self)
    }

    pub fn var(self: &Arc<Self>, index: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), index, 1), 1)
    }

    /// `deg_β(x^a) = Σ a_j β_j`.
    pub fn beta_degree(&self, m: &Monomial) -> Result<Vec<i64>> {
        let beta = self.beta.as_ref().ok_or(Error::NotGraded)?;
        Ok(beta
            .iter()
            .map(|row| row.iter().zip(m.exps()).map(|(&b, &e)| b * e as i64).sum())
            .collect())
    }

    /// Common β-degree of all terms, or `None` when `f` is not homogeneous.
    /// The zero polynomial is homogeneous of every degree; `Some(vec![])`
    /// is returned for it.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Result<Option<Vec<i64>>> {
        let mut degree: Option<Vec<i64>> = None;
        for (m, _) in f.raw_terms() {
            let d = self.beta_degree(m)?;
            match &degree {
                None => degree = Some(d),
                Some(prev) if *prev != d => return Ok(None),
                _ => {}
            }
        }
        Ok(Some(degree.unwrap_or_default()))
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.homogeneous_degree(f)?.is_some())
    }

    /// All monomials of β-degree `alpha`, in descending lex order
    /// (`x_1 > … > x_r`).
    pub fn graded_monomial_basis(&self, alpha: &[i64]) -> Result<Vec<Monomial>> {
        let beta = self.beta.as_ref().ok_or(Error::NotGraded)?;
        if alpha.len() != beta.len() {
            return Err(Error::DimensionMismatch(format!(
                "degree has {} entries, grading has {} rows",
                alpha.len(),
                beta.len()
            )));
        }
        let r = self.nvars();
        if let Some(j) = (0..r).find(|&j| beta.iter().all(|row| row[j] == 0)) {
            return Err(Error::UnboundedDegreePiece(j));
        }
        let mut out = Vec::new();
        if alpha.iter().any(|&a| a < 0) {
            return Ok(out);
        }
        let mut exps = vec![0u64; r];
        let mut remaining = alpha.to_vec();
        enumerate_degree(beta, 0, &mut remaining, &mut exps, &mut out);
        Ok(out)
    }

    /// The ring on a subset of the variables (same field; β restricted to the
    /// kept columns when that keeps it a valid grading, otherwise ungraded).
    pub fn subring(&self, keep: &[usize]) -> Arc<Ring> {
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        if let Some(beta) = &self.beta {
            let sub: Vec<Vec<i64>> = beta
                .iter()
                .map(|row| keep.iter().map(|&j| row[j]).collect())
                .collect();
            if let Ok(ring) = Ring::graded_with_names(self.field.clone(), names, sub) {
                return ring;
            }
            let names = keep.iter().map(|&i| self.names[i].clone()).collect();
            return Ring::ungraded(self.field.clone(), names);
        }
        Ring::ungraded(self.field.clone(), names)
    }

    /// This ring extended by extra (ungraded) variables appended at the end.
    pub fn extended(&self, extra: &[String]) -> Arc<Ring> {
        let mut names = self.names.clone();
        names.extend(extra.iter().cloned());
        Ring::ungraded(self.field.clone(), names)
    }

    /// Same variables and field, no grading.
    pub fn forget_grading(&self) -> Arc<Ring> {
        Ring::ungraded(self.field.clone(), self.names.clone())
    }

    pub fn same_variables(&self, other: &Ring) -> bool {
        self.field == other.field && self.names == other.names
    }
}

fn enumerate_degree(
    beta: &[Vec<i64>],
    j: usize,
    remaining: &mut Vec<i64>,
    exps: &mut Vec<u64>,
    out: &mut Vec<Monomial>,
) {
    let r = exps.len();
    if j == r {
        if remaining.iter().all(|&a| a == 0) {
            out.push(Monomial::try_from_exps(exps).expect("degree piece exponent overflow"));
        }
        return;
    }
    // a_j is bounded by remaining_i / β_ij over rows where β_ij > 0.
    let cap = beta
        .iter()
        .zip(remaining.iter())
        .filter(|(row, _)| row[j] > 0)
        .map(|(row, &rem)| rem / row[j])
        .min()
        .unwrap_or(0);
    for a in (0..=cap).rev() {
        for (i, row) in beta.iter().enumerate() {
            remaining[i] -= a * row[j];
        }
        exps[j] = a as u64;
        enumerate_degree(beta, j + 1, remaining, exps, out);
        for (i, row) in beta.iter().enumerate() {
            remaining[i] += a * row[j];
        }
    }
    exps[j] = 0;
}
