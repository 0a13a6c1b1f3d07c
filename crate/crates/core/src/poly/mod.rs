//! Sparse multivariate polynomials over `GF(q)` in a β-graded ring.

mod monomial;
mod order;
pub mod parse;
mod ring;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use ring::Ring;

use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// A polynomial with nonzero coefficients, terms kept in descending lex order
/// (`x_1 > x_2 > …`), which is also the printing order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring.same_variables(&other.ring)
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c.raw())
    }

    /// `c · m` with a raw coefficient.
    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: u32) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// `x^plus - x^minus`.
    pub fn binomial(ring: &Arc<Ring>, plus: Monomial, minus: Monomial) -> Self {
        let one = ring.field().one().raw();
        let neg = ring.field().neg_raw(one);
        Self::from_raw_terms(ring, vec![(plus, one), (minus, neg)])
    }

    /// Combine like terms from an arbitrary list of raw `(monomial, coeff)`.
    pub fn from_raw_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, u32)>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add_raw(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        Self::from_raw_terms(ring, terms.into_iter().map(|(m, c)| (m, c.raw())).collect())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn raw_terms(&self) -> impl Iterator<Item = (&Monomial, u32)> + '_ {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> + '_ {
        let field = self.ring.field();
        self.terms.iter().map(move |(m, c)| (m, field.wrap(*c)))
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        let c = self
            .terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0);
        self.ring.field().wrap(c)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, FieldElement)> {
        let field = self.ring.field();
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, field.wrap(*c)))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring.same_variables(&other.ring),
            "polynomial arithmetic across different rings"
        );
    }

    pub fn add_poly(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add_raw(a.1, b.1);
                    if c != 0 {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg_poly(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg_raw(*c)))
                .collect(),
        }
    }

    pub fn sub_poly(&self, other: &Polynomial) -> Polynomial {
        self.add_poly(&other.neg_poly())
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        self.scale_raw(c.raw())
    }

    pub(crate) fn scale_raw(&self, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul_raw(*a, c)))
                .collect(),
        }
    }

    /// Multiplication by a monomial preserves the lex order of terms.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    pub fn mul_poly(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                acc.push((a.mul(b), field.mul_raw(*ca, *cb)));
            }
        }
        Polynomial::from_raw_terms(&self.ring, acc)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Divide so the leading coefficient under `order` becomes one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale_raw(self.ring.field().inv_raw(c.raw())),
        }
    }

    /// Value at a point of `F_q^r`; `0^0 = 1`.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let field = self.ring.field();
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        if let Some(bad) = point.iter().find(|e| e.order() != field.order()) {
            return Err(Error::FieldMismatch {
                left: field.order(),
                right: bad.order(),
            });
        }
        let raw: Vec<u32> = point.iter().map(|e| e.raw()).collect();
        Ok(field.wrap(self.evaluate_raw(&raw)))
    }

    pub(crate) fn evaluate_raw(&self, point: &[u32]) -> u32 {
        let field = self.ring.field();
        let mut total = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = field.mul_raw(v, field.pow_raw(point[i], e as i64));
                    if v == 0 {
                        break;
                    }
                }
            }
            total = field.add_raw(total, v);
        }
        total
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.assert_same_ring(divisor);
        let (lead, lc) = divisor.terms.first()?;
        let field = self.ring.field();
        let inv = field.inv_raw(*lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = lead.quotient_of(m)?;
            let coeff = field.mul_raw(*c, inv);
            let step = divisor.mul_monomial(&q).scale_raw(coeff);
            quotient.push((q, coeff));
            rest = rest.sub_poly(&step);
        }
        Some(Polynomial::from_raw_terms(&self.ring, quotient))
    }

    /// Move into another ring; variable `i` of this ring becomes variable
    /// `map[i]` of `target`.
    pub fn remap(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        Polynomial::from_raw_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(map, n), *c))
                .collect(),
        )
    }

    /// Reinterpret in a ring with identical variables (e.g. after attaching
    /// or dropping a grading).
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    pub(crate) fn into_raw_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_poly(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_poly(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_poly(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_poly()
    }
}
