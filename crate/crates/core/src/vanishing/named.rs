//! Toric data `(β, B)` and the named families with known vanishing ideals.

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gf::FiniteField;
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, Ring};

/// Which family a [`ToricData`] was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Hirzebruch(u32),
    WeightedProjective(Vec<i64>),
    ProductProjective(Vec<usize>),
    Custom,
}

/// A graded Cox ring together with the irrelevant ideal `B`, given by
/// squarefree monomial generators.
#[derive(Debug, Clone)]
pub struct ToricData {
    ring: Arc<Ring>,
    irrelevant: Vec<Monomial>,
    construction: Construction,
}

impl ToricData {
    pub fn new(ring: Arc<Ring>, irrelevant: Vec<Monomial>) -> Result<ToricData> {
        if ring.beta().is_none() {
            return Err(Error::NotGraded);
        }
        for m in &irrelevant {
            if m.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch(format!(
                    "monomial in {} variables, ring has {}",
                    m.nvars(),
                    ring.nvars()
                )));
            }
            if m.exps().iter().any(|&e| e > 1) {
                return Err(Error::NotSquarefree(m.format(ring.names())));
            }
        }
        let mut irrelevant = irrelevant;
        irrelevant.sort_by(|a, b| b.cmp(a));
        irrelevant.dedup();
        Ok(ToricData {
            ring,
            irrelevant,
            construction: Construction::Custom,
        })
    }

    /// Build from β and `B` given as monomial strings in `x_1..x_r`.
    pub fn parse(field: Arc<FiniteField>, beta: Vec<Vec<i64>>, b: &[&str]) -> Result<ToricData> {
        let ring = Ring::graded(field, beta)?;
        let mut gens = Vec::with_capacity(b.len());
        for src in b {
            let p = ring.parse(src)?;
            let mut terms = p.raw_terms();
            match (terms.next(), terms.next()) {
                (Some((m, 1)), None) => gens.push(m.clone()),
                _ => return Err(Error::NotSquarefree(src.to_string())),
            }
        }
        Self::new(ring, gens)
    }

    fn named(ring: Arc<Ring>, irrelevant: Vec<Monomial>, c: Construction) -> Result<ToricData> {
        let mut t = Self::new(ring, irrelevant)?;
        t.construction = c;
        Ok(t)
    }

    /// The Hirzebruch surface `H_ℓ`: `β = [[1,0,1,ℓ],[0,1,0,1]]`,
    /// `B = ⟨x_1,x_3⟩ ∩ ⟨x_2,x_4⟩`.
    pub fn hirzebruch(field: Arc<FiniteField>, ell: u32) -> Result<ToricData> {
        if ell == 0 {
            return Err(Error::BadGrading("ℓ must be positive".into()));
        }
        let beta = vec![vec![1, 0, 1, ell as i64], vec![0, 1, 0, 1]];
        let ring = Ring::graded(field, beta)?;
        let b = [[1, 1, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1]]
            .iter()
            .map(|e| Monomial::from_exps(e))
            .collect();
        Self::named(ring, b, Construction::Hirzebruch(ell))
    }

    /// The weighted projective space `P(w_1, …, w_r)`: `β = [w_1 ⋯ w_r]`,
    /// `B = ⟨x_1, …, x_r⟩`. Any `r − 1` of the weights must be coprime.
    pub fn weighted_projective(field: Arc<FiniteField>, weights: &[i64]) -> Result<ToricData> {
        let r = weights.len();
        if r < 2 {
            return Err(Error::BadWeights("need at least two weights".into()));
        }
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::BadWeights("weights must be positive".into()));
        }
        for skip in 0..r {
            let g = (0..r)
                .filter(|&i| i != skip)
                .fold(0i64, |g, i| g.gcd(&weights[i]));
            if g != 1 {
                return Err(Error::BadWeights(format!(
                    "weights without w_{} have common divisor {g}",
                    skip + 1
                )));
            }
        }
        let ring = Ring::graded(field, vec![weights.to_vec()])?;
        let b = (0..r).map(|i| Monomial::var(r, i, 1)).collect();
        Self::named(ring, b, Construction::WeightedProjective(weights.to_vec()))
    }

    /// `P^{n_1} × ⋯ × P^{n_k}`: block grading by the standard basis of `Z^k`
    /// and `B` the product of the block maximal ideals.
    pub fn product_projective(field: Arc<FiniteField>, dims: &[usize]) -> Result<ToricData> {
        if dims.is_empty() {
            return Err(Error::BadGrading("empty list of factors".into()));
        }
        let r: usize = dims.iter().map(|n| n + 1).sum();
        let mut beta = vec![vec![0i64; r]; dims.len()];
        let mut blocks = Vec::with_capacity(dims.len());
        let mut start = 0;
        for (i, n) in dims.iter().enumerate() {
            for j in start..start + n + 1 {
                beta[i][j] = 1;
            }
            blocks.push((start..start + n + 1).collect::<Vec<_>>());
            start += n + 1;
        }
        let ring = Ring::graded(field, beta)?;
        let mut b = vec![vec![0u16; r]];
        for block in &blocks {
            b = b
                .into_iter()
                .flat_map(|e| {
                    block.iter().map(move |&j| {
                        let mut e = e.clone();
                        e[j] = 1;
                        e
                    })
                })
                .collect();
        }
        let b = b.iter().map(|e| Monomial::from_exps(e)).collect();
        Self::named(ring, b, Construction::ProductProjective(dims.to_vec()))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.ring.field()
    }

    pub fn beta(&self) -> &[Vec<i64>] {
        self.ring.beta().expect("toric data is graded")
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn irrelevant_monomials(&self) -> &[Monomial] {
        &self.irrelevant
    }

    pub fn irrelevant_ideal(&self) -> Ideal {
        let gens = self
            .irrelevant
            .iter()
            .map(|m| Polynomial::monomial(&self.ring, m.clone(), 1))
            .collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// Whether the point lies in `V(B)`, i.e. every generator of `B` vanishes.
    pub fn in_irrelevant_locus(&self, point: &[u32]) -> bool {
        self.irrelevant
            .iter()
            .all(|m| m.exps().iter().zip(point).any(|(&e, &v)| e > 0 && v == 0))
    }

    /// The closed form of `I(A^r_G(F_q))` where one is known.
    pub fn closed_form_affine(&self) -> Option<Ideal> {
        match &self.construction {
            Construction::Hirzebruch(ell) => Some(self.hirzebruch_affine(*ell)),
            Construction::WeightedProjective(w) => self.wps_ones_a_b(w),
            Construction::ProductProjective(dims) => Some(self.product_binomials(dims)),
            Construction::Custom => None,
        }
    }

    /// The closed form of `I(X(F_q))` where one is known.
    pub fn closed_form_toric(&self) -> Option<Ideal> {
        match &self.construction {
            Construction::Hirzebruch(ell) => Some(self.hirzebruch_toric(*ell)),
            Construction::WeightedProjective(w) => self.wps_ones_a_b(w),
            Construction::ProductProjective(dims) => Some(self.product_binomials(dims)),
            Construction::Custom => None,
        }
    }

    fn q(&self) -> u64 {
        self.field().order() as u64
    }

    /// Signed sum of monomials given by exponent vectors.
    fn poly(&self, terms: &[(i64, [u64; 4])]) -> Polynomial {
        let field = self.field();
        Polynomial::from_raw_terms(
            &self.ring,
            terms
                .iter()
                .map(|(c, e)| {
                    (
                        Monomial::try_from_exps(e).expect("closed-form exponent overflow"),
                        field.int_raw(*c),
                    )
                })
                .collect(),
        )
    }

    /// `x^plus − x^minus` from exponent vectors.
    fn binomial(&self, plus: &[u64], minus: &[u64]) -> Polynomial {
        Polynomial::binomial(
            &self.ring,
            Monomial::try_from_exps(plus).expect("closed-form exponent overflow"),
            Monomial::try_from_exps(minus).expect("closed-form exponent overflow"),
        )
    }

    fn ideal(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// `F_1 = x_3x_1f_1`, `F_2 = x_4x_2x_1f_2`, `F_3 = x_4x_3x_2f_3`.
    fn hirzebruch_f123(&self, ell: u32) -> [Polynomial; 3] {
        let (q, l) = (self.q(), ell as u64);
        [
            self.poly(&[(1, [1, 0, q, 0]), (-1, [q, 0, 1, 0])]),
            self.poly(&[(1, [1, 1, 0, q]), (-1, [1 + (q - 1) * l, q, 0, 1])]),
            self.poly(&[(1, [0, 1, 1, q]), (-1, [0, q, 1 + (q - 1) * l, 1])]),
        ]
    }

    fn hirzebruch_affine(&self, ell: u32) -> Ideal {
        self.ideal(self.hirzebruch_f123(ell).to_vec())
    }

    fn hirzebruch_toric(&self, ell: u32) -> Ideal {
        let (q, l) = (self.q(), ell as u64);
        let [f1, f2, f3] = self.hirzebruch_f123(ell);
        if ell > 1 {
            let f4 = self.poly(&[
                (1, [0, 1, 0, q]),
                (-1, [0, q, (q - 1) * l, 1]),
                (1, [(q - 1) * (l - 1), q, q - 1, 1]),
                (-1, [(q - 1) * l, q, 0, 1]),
            ]);
            self.ideal(vec![f1, f4])
        } else {
            let f4 = self.poly(&[
                (1, [0, 1, 0, 2 * q - 1]),
                (-1, [0, 2 * q - 1, 2 * (q - 1), 1]),
                (1, [q - 1, 2 * q - 1, q - 1, 1]),
                (-1, [2 * (q - 1), 2 * q - 1, 0, 1]),
            ]);
            self.ideal(vec![f1, f2, f3, f4])
        }
    }

    /// `P(1, …, 1, a, b)`: the pairwise binomials `x_i x_j (…)`.
    fn wps_ones_a_b(&self, w: &[i64]) -> Option<Ideal> {
        let r = w.len();
        if w[..r - 2].iter().any(|&x| x != 1) {
            return None;
        }
        let (a, b) = (w[r - 2] as u64, w[r - 1] as u64);
        let q1 = self.q() - 1;
        let pair = |i: usize, ei: u64, j: usize, ej: u64| {
            let mut plus = vec![0u64; r];
            let mut minus = vec![0u64; r];
            plus[i] = ei + 1;
            plus[j] = 1;
            minus[i] = 1;
            minus[j] = ej + 1;
            self.binomial(&plus, &minus)
        };
        let mut gens = Vec::new();
        for i in 0..r - 2 {
            for j in i + 1..r - 2 {
                gens.push(pair(i, q1, j, q1));
            }
        }
        for k in 0..r - 2 {
            gens.push(pair(k, q1 * a, r - 2, q1));
        }
        for k in 0..r - 2 {
            gens.push(pair(k, q1 * b, r - 1, q1));
        }
        gens.push(pair(r - 2, q1 * b, r - 1, q1 * a));
        Some(self.ideal(gens))
    }

    /// `x_i x_j (x_i^{q−1} − x_j^{q−1})` for `i < j` in the same block.
    fn product_binomials(&self, dims: &[usize]) -> Ideal {
        let r = self.nvars();
        let q = self.q();
        let mut gens = Vec::new();
        let mut start = 0;
        for n in dims {
            for i in start..start + n + 1 {
                for j in i + 1..start + n + 1 {
                    let mut plus = vec![0u64; r];
                    let mut minus = vec![0u64; r];
                    plus[i] = q;
                    plus[j] = 1;
                    minus[i] = 1;
                    minus[j] = q;
                    gens.push(self.binomial(&plus, &minus));
                }
            }
            start += n + 1;
        }
        self.ideal(gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, 1).unwrap())
    }

    #[test]
    fn hirzebruch_data() {
        let t = ToricData::hirzebruch(field(5), 3).unwrap();
        assert_eq!(t.beta(), &[vec![1, 0, 1, 3], vec![0, 1, 0, 1]]);
        assert_eq!(t.irrelevant_monomials().len(), 4);
        assert!(t.in_irrelevant_locus(&[1, 0, 1, 0]));
        assert!(t.in_irrelevant_locus(&[0, 1, 0, 1]));
        assert!(!t.in_irrelevant_locus(&[1, 1, 0, 0]));
        let affine = t.closed_form_affine().unwrap();
        let shown: Vec<String> = affine.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            shown,
            [
                "-x_1^5*x_3+x_1*x_3^5",
                "-x_1^13*x_2^5*x_4+x_1*x_2*x_4^5",
                "-x_2^5*x_3^13*x_4+x_2*x_3*x_4^5"
            ]
        );
        assert!(affine.is_homogeneous().unwrap());
        assert!(t.closed_form_toric().unwrap().is_homogeneous().unwrap());
        let t1 = ToricData::hirzebruch(field(3), 1).unwrap();
        assert_eq!(t1.closed_form_toric().unwrap().gens().len(), 4);
        assert!(t1.closed_form_toric().unwrap().is_homogeneous().unwrap());
    }

    #[test]
    fn weighted_projective_checks() {
        assert!(matches!(
            ToricData::weighted_projective(field(3), &[2, 2, 4]),
            Err(Error::BadWeights(_))
        ));
        assert!(matches!(
            ToricData::weighted_projective(field(3), &[1, 0, 4]),
            Err(Error::BadWeights(_))
        ));
        let t = ToricData::weighted_projective(field(3), &[1, 2, 3]).unwrap();
        let closed = t.closed_form_toric().unwrap();
        let shown: Vec<String> = closed.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            shown,
            [
                "x_1^5*x_2-x_1*x_2^3",
                "x_1^7*x_3-x_1*x_3^3",
                "x_2^7*x_3-x_2*x_3^5"
            ]
        );
        assert!(closed.is_homogeneous().unwrap());
        let t = ToricData::weighted_projective(field(3), &[2, 1, 3]).unwrap();
        assert!(t.closed_form_toric().is_none());
    }

    #[test]
    fn product_projective_data() {
        let t = ToricData::product_projective(field(3), &[2, 3]).unwrap();
        assert_eq!(
            t.beta(),
            &[vec![1, 1, 1, 0, 0, 0, 0], vec![0, 0, 0, 1, 1, 1, 1]]
        );
        assert_eq!(t.irrelevant_monomials().len(), 12);
        assert_eq!(t.closed_form_affine().unwrap().gens().len(), 9);
    }

    #[test]
    fn custom_data_parses_irrelevant_ideal() {
        let t = ToricData::parse(field(3), vec![vec![1, 1]], &["x_1", "x_2"]).unwrap();
        assert_eq!(t.irrelevant_monomials().len(), 2);
        assert!(matches!(
            ToricData::parse(field(3), vec![vec![1, 1]], &["x_1^2"]),
            Err(Error::NotSquarefree(_))
        ));
        assert!(matches!(
            ToricData::parse(field(3), vec![vec![1, 1]], &["x_1 + x_2"]),
            Err(Error::NotSquarefree(_))
        ));
    }
}
