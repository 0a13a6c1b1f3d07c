//! Evaluation codes `C_{α,Y}`: evaluate a basis of `S_α` (or of `(S/I)_α`)
//! at a list of points and read off `[N, K, δ]`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::FiniteField;
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::vanishing::OrbitPoint;

/// Default cap on `q^K − 1`, the number of messages scanned for `δ`.
pub const DEFAULT_MAX_MESSAGES: u64 = 100_000_000;

/// Length, dimension and minimum distance. `delta` is `None` when the
/// exhaustive search was over budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub delta: Option<usize>,
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.delta {
            Some(d) => write!(f, "[{},{},{}]", self.n, self.k, d),
            None => write!(f, "[{},{},?]", self.n, self.k),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EvaluationCode {
    field: Arc<FiniteField>,
    points: Vec<Vec<u32>>,
    basis: Vec<Monomial>,
    matrix: Vec<Vec<u32>>,
    params: CodeParams,
}

impl EvaluationCode {
    /// Rows are the evaluations of the standard monomials of `(S/I)_α` when
    /// `ideal` is given, else of all monomials of degree `α`.
    pub fn new(
        ring: &Arc<Ring>,
        points: &[Vec<u32>],
        alpha: &[i64],
        ideal: Option<&Ideal>,
        max_messages: u64,
    ) -> Result<EvaluationCode> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        check_points(ring, points)?;
        let basis = match ideal {
            Some(i) => i.quotient_graded_basis(alpha)?,
            None => ring.graded_monomial_basis(alpha)?,
        };
        let field = ring.field().clone();
        let matrix = evaluation_matrix(&field, &basis, points);
        let k = rank(&field, &matrix);
        let delta = match minimum_distance(&field, &matrix, max_messages) {
            Ok(d) => Some(d),
            Err(Error::BudgetExceeded(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(EvaluationCode {
            field,
            points: points.to_vec(),
            basis,
            matrix,
            params: CodeParams {
                n: points.len(),
                k,
                delta,
            },
        })
    }

    /// The code on orbit representatives, in the given order.
    pub fn on_orbits(
        ring: &Arc<Ring>,
        orbits: &[OrbitPoint],
        alpha: &[i64],
        ideal: Option<&Ideal>,
        max_messages: u64,
    ) -> Result<EvaluationCode> {
        let points: Vec<Vec<u32>> = orbits.iter().map(|o| o.raw()).collect();
        Self::new(ring, &points, alpha, ideal, max_messages)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// `|basis| × N`, raw field values.
    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }
}

fn check_points(ring: &Ring, points: &[Vec<u32>]) -> Result<()> {
    let q = ring.field().order();
    for p in points {
        if p.len() != ring.nvars() || p.iter().any(|&v| v >= q) {
            return Err(Error::DimensionMismatch(format!(
                "point {p:?} is not in F_{q}^{}",
                ring.nvars()
            )));
        }
    }
    Ok(())
}

fn eval_monomial(field: &FiniteField, m: &Monomial, point: &[u32]) -> u32 {
    let mut v = 1;
    for (&x, &e) in point.iter().zip(m.exps()) {
        if e > 0 {
            v = field.mul_raw(v, field.pow_raw(x, e as i64));
        }
    }
    v
}

/// Row `i` holds the values of `basis[i]` at the points.
pub fn evaluation_matrix(
    field: &FiniteField,
    basis: &[Monomial],
    points: &[Vec<u32>],
) -> Vec<Vec<u32>> {
    basis
        .iter()
        .map(|m| points.iter().map(|p| eval_monomial(field, m, p)).collect())
        .collect()
}

/// Reduced row echelon form; zero rows are dropped. Also returns the pivot
/// columns.
pub fn row_reduce(field: &FiniteField, rows: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(p) = (top..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(top, p);
        let inv = field.inv_raw(m[top][col]);
        for v in m[top].iter_mut() {
            *v = field.mul_raw(*v, inv);
        }
        let pivot_row = m[top].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == top || row[col] == 0 {
                continue;
            }
            let c = field.neg_raw(row[col]);
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                if pv != 0 {
                    *v = field.add_raw(*v, field.mul_raw(c, pv));
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    (m, pivots)
}

/// Rank over `F_q`.
pub fn rank(field: &FiniteField, rows: &[Vec<u32>]) -> usize {
    row_reduce(field, rows).0.len()
}

/// Basis of `{x : A x = 0}` for the `rows × ncols` matrix `A`.
pub fn nullspace(field: &FiniteField, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let (rref, pivots) = row_reduce(field, rows);
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![0; ncols];
        v[f] = 1;
        for (row, &pc) in rref.iter().zip(&pivots) {
            v[pc] = field.neg_raw(row[f]);
        }
        v
    })
    .collect()
}

fn weight(word: &[u32]) -> usize {
    word.iter().filter(|&&v| v != 0).count()
}

/// Exact minimum Hamming weight of the row space of `rows`.
///
/// Scans one message per line (first nonzero coordinate 1) over an echelon
/// basis, stepping through the free coordinates in modular Gray-code order so
/// each step adds one precomputed multiple of a basis row. The zero code has
/// minimum distance 0 by convention.
pub fn minimum_distance(
    field: &FiniteField,
    rows: &[Vec<u32>],
    max_messages: u64,
) -> Result<usize> {
    let (basis, _) = row_reduce(field, rows);
    let k = basis.len();
    if k == 0 {
        return Ok(0);
    }
    let q = field.order() as u64;
    let messages = q.checked_pow(k as u32).map(|m| m - 1);
    if messages.is_none_or(|m| m > max_messages) {
        return Err(Error::BudgetExceeded(format!(
            "{q}^{k} - 1 messages exceed {max_messages}"
        )));
    }
    let n = basis[0].len();
    let elements: Vec<u32> = field.elements().iter().map(|e| e.raw()).collect();
    // steps[i][j]: (elements[j+1] − elements[j]) · basis[i], cyclically
    let steps: Vec<Vec<Vec<u32>>> = basis
        .iter()
        .map(|row| {
            (0..elements.len())
                .map(|j| {
                    let next = elements[(j + 1) % elements.len()];
                    let d = field.sub_raw(next, elements[j]);
                    row.iter().map(|&v| field.mul_raw(d, v)).collect()
                })
                .collect()
        })
        .collect();

    // Shards: leading row `lead`, plus the coefficient of row `lead + 1`.
    let mut shards = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            shards.extend(elements.iter().map(|&c| (lead, Some(c))));
        } else {
            shards.push((lead, None));
        }
    }
    let best = shards
        .par_iter()
        .map(|&(lead, second)| {
            let mut word = basis[lead].clone();
            let mut free_from = lead + 1;
            if let Some(c) = second {
                for (w, &v) in word.iter_mut().zip(&basis[lead + 1]) {
                    *w = field.add_raw(*w, field.mul_raw(c, v));
                }
                free_from += 1;
            }
            let free = k - free_from;
            let mut best = weight(&word);
            let mut digits = vec![0usize; free];
            let total = (q as usize).pow(free as u32);
            for t in 1..total {
                let mut z = 0;
                let mut rest = t;
                while rest % q as usize == 0 {
                    rest /= q as usize;
                    z += 1;
                }
                let step = &steps[free_from + z][digits[z]];
                digits[z] = (digits[z] + 1) % q as usize;
                for (w, &s) in word.iter_mut().zip(step) {
                    *w = field.add_raw(*w, s);
                }
                best = best.min(weight(&word));
            }
            best
        })
        .min()
        .unwrap_or(n);
    Ok(best)
}

/// Basis of `I_α(Y)`: the kernel of evaluation at `points` on all of `S_α`,
/// found by linear algebra alone.
pub fn graded_vanishing_space(
    ring: &Arc<Ring>,
    points: &[Vec<u32>],
    alpha: &[i64],
) -> Result<Vec<Polynomial>> {
    check_points(ring, points)?;
    let field = ring.field();
    let monomials = ring.graded_monomial_basis(alpha)?;
    let m = evaluation_matrix(field, &monomials, points);
    // c ∈ ker(Mᵀ)  ⇔  Σ c_i · row_i = 0
    let transposed: Vec<Vec<u32>> = (0..points.len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect();
    Ok(nullspace(field, &transposed, monomials.len())
        .into_iter()
        .map(|c| {
            let terms = monomials
                .iter()
                .zip(c)
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (m.clone(), c))
                .collect();
            Polynomial::from_raw_terms(ring, terms)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn gf(p: u64, k: u32) -> FiniteField {
        FiniteField::new(p, k).unwrap()
    }

    /// Brute-force minimum weight over every message.
    fn brute_distance(field: &FiniteField, rows: &[Vec<u32>]) -> usize {
        let elements: Vec<u32> = field.elements().iter().map(|e| e.raw()).collect();
        let n = rows[0].len();
        let mut best = usize::MAX;
        for msg in crate::vanishing::odometer(&elements, rows.len()).skip(1) {
            let mut w = vec![0; n];
            for (c, row) in msg.iter().zip(rows) {
                for (x, &v) in w.iter_mut().zip(row) {
                    *x = field.add_raw(*x, field.mul_raw(*c, v));
                }
            }
            let wt = weight(&w);
            if wt > 0 {
                best = best.min(wt);
            }
        }
        best
    }

    #[test]
    fn repetition_code() {
        let f = gf(5, 1);
        let rows = vec![vec![1; 7]];
        assert_eq!(rank(&f, &rows), 1);
        assert_eq!(
            minimum_distance(&f, &rows, DEFAULT_MAX_MESSAGES).unwrap(),
            7
        );
    }

    #[test]
    fn zero_and_identity_matrices() {
        let f = gf(3, 1);
        assert_eq!(rank(&f, &vec![vec![0; 4]; 3]), 0);
        let id: Vec<Vec<u32>> = (0..5)
            .map(|i| (0..5).map(|j| u32::from(i == j)).collect())
            .collect();
        assert_eq!(rank(&f, &id), 5);
        assert_eq!(minimum_distance(&f, &id, DEFAULT_MAX_MESSAGES).unwrap(), 1);
    }

    #[test]
    fn hamming_code_over_f2() {
        let f = gf(2, 1);
        let rows = vec![
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ];
        assert_eq!(
            minimum_distance(&f, &rows, DEFAULT_MAX_MESSAGES).unwrap(),
            3
        );
    }

    #[test]
    fn budget_leaves_delta_unknown() {
        let f = gf(3, 1);
        let id: Vec<Vec<u32>> = (0..4)
            .map(|i| (0..4).map(|j| u32::from(i == j)).collect())
            .collect();
        assert!(matches!(
            minimum_distance(&f, &id, 79),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(minimum_distance(&f, &id, 80).is_ok());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = gf(5, 1);
        let a = vec![vec![1, 2, 3, 4], vec![2, 4, 1, 3]];
        let ns = nullspace(&f, &a, 4);
        assert_eq!(ns.len(), 4 - rank(&f, &a));
        for v in &ns {
            for row in &a {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| f.add_raw(acc, f.mul_raw(x, y)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn single_monomial_space_does_not_vanish() {
        let f = Arc::new(gf(2, 1));
        let ring = Ring::graded(f, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let all = crate::vanishing::odometer(&[0, 1], 2).collect::<Vec<_>>();
        assert!(graded_vanishing_space(&ring, &all, &[1, 0])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn empty_point_set_is_rejected() {
        let f = Arc::new(gf(3, 1));
        let ring = Ring::graded(f, vec![vec![1]]).unwrap();
        assert_eq!(
            EvaluationCode::new(&ring, &[], &[1], None, 10).unwrap_err(),
            Error::EmptyPointSet
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn gray_search_matches_brute_force_and_singleton(
                (p, k) in prop::sample::select(vec![(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2)]),
                seed in prop::collection::vec(0u32..1000, 4 * 6),
                nrows in 1usize..=4,
                ncols in 1usize..=6,
            ) {
                let f = gf(p, k);
                let q = f.order();
                let rows: Vec<Vec<u32>> = (0..nrows)
                    .map(|i| (0..ncols).map(|j| seed[i * 6 + j] % q).collect())
                    .collect();
                let kk = rank(&f, &rows);
                let d = minimum_distance(&f, &rows, DEFAULT_MAX_MESSAGES).unwrap();
                if kk == 0 {
                    prop_assert_eq!(d, 0);
                } else {
                    prop_assert_eq!(d, brute_distance(&f, &rows));
                    prop_assert!(d <= ncols - kk + 1);
                    for row in &rows {
                        let w = weight(row);
                        prop_assert!(w == 0 || w >= d);
                    }
                }
            }
        }
    }
}
