//! Finite fields `GF(p^k)`.
//!
//! Elements are stored by their packed coefficient vector: an element
//! `c_0 + c_1 a + … + c_{k-1} a^{k-1}` (with `a` a root of the modulus) has
//! the raw value `Σ c_i p^i`. Enumeration order is ascending raw value, which
//! is lexicographic order on the coefficient vector read from the top
//! coefficient down, with zero first.

use crate::error::{Error, Result};

/// Largest field order accepted by [`FiniteField::new`].
pub const DEFAULT_MAX_ORDER: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// `a^e`; the second operand is ignored.
    Pow(i64),
    /// `1/a`; the second operand is ignored.
    Inv,
}

/// An element of some `GF(q)`. Carries `q` so that mixing fields is caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    q: u32,
    value: u32,
}

impl FieldElement {
    /// Packed coefficient vector `Σ c_i p^i`.
    pub fn raw(self) -> u32 {
        self.value
    }

    pub fn order(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients from the constant term up (length k+1).
    modulus: Vec<u32>,
    inv: Vec<u32>,
    /// Discrete exp/log tables, only populated for k > 1.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Self::with_cap(p, k, DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::DegreeZero);
        }
        let size = p.checked_pow(k).unwrap_or(u64::MAX);
        if size > cap || size > u32::MAX as u64 / 2 {
            return Err(Error::FieldTooLarge { size, cap });
        }
        let (p, q) = (p as u32, size as u32);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k as usize)
        };
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            inv: Vec::new(),
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        if self.k > 1 {
            let generator = (2..q)
                .find(|&g| self.multiplicative_order_slow(g) == q - 1)
                .unwrap_or(1);
            self.exp = vec![0; (q - 1) as usize];
            self.log = vec![0; q as usize];
            let mut x = 1;
            for i in 0..q - 1 {
                self.exp[i as usize] = x;
                self.log[x as usize] = i;
                x = self.mul_slow(x, generator);
            }
        }
        self.inv = vec![0; q as usize];
        for a in 1..q {
            self.inv[a as usize] = if self.k == 1 {
                pow_mod(a, q - 2, self.p)
            } else {
                let l = self.log[a as usize];
                self.exp[((q - 1 - l) % (q - 1)) as usize]
            };
        }
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut d = vec![0; self.k as usize];
        for slot in d.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p as u64, self.k as usize);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let low: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack(&low)
    }

    fn multiplicative_order_slow(&self, g: u32) -> u32 {
        let mut x = g;
        let mut n = 1;
        while x != 1 {
            x = self.mul_slow(x, g);
            n += 1;
            if n > self.q {
                return 0;
            }
        }
        n
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the monic modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// The class of `a` (root of the modulus); equals zero when `k = 1`.
    pub fn root(&self) -> FieldElement {
        if self.k == 1 {
            self.zero()
        } else {
            self.wrap(self.p)
        }
    }

    pub(crate) fn wrap(&self, value: u32) -> FieldElement {
        debug_assert!(value < self.q);
        FieldElement { q: self.q, value }
    }

    pub fn element(&self, raw: u32) -> Result<FieldElement> {
        if raw >= self.q {
            return Err(Error::DimensionMismatch(format!(
                "raw value {raw} outside GF({})",
                self.q
            )));
        }
        Ok(self.wrap(raw))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(self.int_raw(n))
    }

    pub(crate) fn int_raw(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn from_coeffs(&self, coeffs: &[i64]) -> FieldElement {
        let mut digits = vec![0; self.k as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            let reduced = c.rem_euclid(self.p as i64) as u32;
            if i < digits.len() {
                digits[i] = (digits[i] + reduced) % self.p;
            } else {
                // fold a^i through the modulus
                let mut t = self.wrap(reduced);
                for _ in 0..i {
                    t = self.wrap(self.mul_raw(t.value, self.root().value));
                }
                let packed = self.add_raw(self.pack(&digits), t.value);
                digits = self.digits(packed);
            }
        }
        self.wrap(self.pack(&digits))
    }

    /// Coefficient vector of `e`, constant term first.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u32> {
        self.digits(e.value)
    }

    /// All `q` elements in enumeration order, zero first.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|v| self.wrap(v)).collect()
    }

    pub fn nonzero_elements(&self) -> Vec<FieldElement> {
        (1..self.q).map(|v| self.wrap(v)).collect()
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if a.q != self.q {
            return Err(Error::FieldMismatch {
                left: self.q,
                right: a.q,
            });
        }
        Ok(())
    }

    pub fn arith(&self, a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let (x, y) = (a.value, b.value);
        let v = match op {
            ArithOp::Add => self.add_raw(x, y),
            ArithOp::Sub => self.sub_raw(x, y),
            ArithOp::Mul => self.mul_raw(x, y),
            ArithOp::Div => {
                if y == 0 {
                    return Err(Error::DivisionByZero);
                }
                self.mul_raw(x, self.inv_raw(y))
            }
            ArithOp::Inv => {
                if x == 0 {
                    return Err(Error::DivisionByZero);
                }
                self.inv_raw(x)
            }
            ArithOp::Pow(e) => {
                if e < 0 && x == 0 {
                    return Err(Error::DivisionByZero);
                }
                self.pow_raw(x, e)
            }
        };
        Ok(self.wrap(v))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.arith(a, b, ArithOp::Add)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.arith(a, b, ArithOp::Sub)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.arith(a, b, ArithOp::Mul)
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.arith(a, b, ArithOp::Div)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.arith(a, a, ArithOp::Inv)
    }

    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        self.arith(a, a, ArithOp::Pow(e))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.wrap(self.neg_raw(a.value)))
    }

    // Unchecked arithmetic on raw values, used by the polynomial kernels.

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let (mut out, mut place) = (0, 1);
            for _ in 0..self.k {
                out += ((a % self.p + b % self.p) % self.p) * place;
                a /= self.p;
                b /= self.p;
                place *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        if self.k == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let mut a = a;
            let (mut out, mut place) = (0, 1);
            for _ in 0..self.k {
                out += ((self.p - a % self.p) % self.p) * place;
                a /= self.p;
                place *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            ((a as u64 * b as u64) % self.p as u64) as u32
        } else if a == 0 || b == 0 {
            0
        } else {
            let l = self.log[a as usize] + self.log[b as usize];
            self.exp[(l % (self.q - 1)) as usize]
        }
    }

    /// Panics on zero; callers check.
    #[inline]
    pub fn inv_raw(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn pow_raw(&self, a: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inv_raw(a) } else { a };
        let mut e = e.unsigned_abs();
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        // Exponents reduce modulo the group order.
        e %= (self.q - 1) as u64;
        let (mut acc, mut b) = (1, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, b);
            }
            b = self.mul_raw(b, b);
            e >>= 1;
        }
        acc
    }

    /// Human-readable form: integers for prime fields, polynomials in `a`
    /// otherwise.
    pub fn format(&self, e: FieldElement) -> String {
        if self.k == 1 {
            return e.value.to_string();
        }
        let digits = self.digits(e.value);
        let mut parts = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else if i > 0 {
                format!("{c}*")
            } else {
                c.to_string()
            };
            parts.push(match i {
                0 => coeff,
                1 => format!("{coeff}a"),
                _ => format!("{coeff}a^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

fn pow_mod(b: u32, mut e: u32, m: u32) -> u32 {
    let (mut acc, m64) = (1u64, m as u64);
    let mut b64 = b as u64 % m64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b64 % m64;
        }
        b64 = b64 * b64 % m64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo the monic `m` over GF(p); both low-first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * mi % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `index` (constant term least significant).
fn monic_from_index(mut index: u64, degree: usize, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        coeffs.push((index % p as u64) as u32);
        index /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    for deg in 1..=n / 2 {
        for idx in 0..(p as u64).pow(deg as u32) {
            let d = monic_from_index(idx, deg, p);
            if poly_rem(f, &d, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    (0..(p as u64).pow(k as u32))
        .map(|idx| monic_from_index(idx, k, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.add(f.from_int(2), f.from_int(2)).unwrap(), f.from_int(1));
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.pow(f5.from_int(2), 4).unwrap(), f5.one());
        assert_eq!(f5.elements().len(), 5);
    }

    #[test]
    fn gf4_modulus_and_order() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let a = f.root();
        let a2 = f.mul(a, a).unwrap();
        assert_eq!(a2, f.add(a, f.one()).unwrap());
        let names: Vec<_> = f.elements().into_iter().map(|e| f.format(e)).collect();
        assert_eq!(names, ["0", "1", "a", "a+1"]);
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn errors() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FiniteField::new(3, 0).unwrap_err(), Error::DegreeZero);
        assert!(matches!(
            FiniteField::new(2, 11),
            Err(Error::FieldTooLarge { .. })
        ));
        let f3 = FiniteField::new(3, 1).unwrap();
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f3.inv(f3.zero()), Err(Error::DivisionByZero));
        assert_eq!(f3.pow(f3.zero(), -1), Err(Error::DivisionByZero));
        assert!(matches!(
            f3.add(f3.one(), f5.one()),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn exhaustive_axioms_small_fields() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            let els = f.elements();
            assert_eq!(els.len() as u32, f.order());
            let mut sorted = els.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), els.len());
            for &a in &els {
                if !a.is_zero() {
                    assert_eq!(f.mul(f.inv(a).unwrap(), a).unwrap(), f.one());
                    assert_eq!(f.pow(a, f.order() as i64 - 1).unwrap(), f.one());
                    assert_eq!(f.pow(a, -2).unwrap(), f.inv(f.mul(a, a).unwrap()).unwrap());
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b).unwrap(), b).unwrap(), a);
                    for &c in &els {
                        let lhs = f.mul(a, f.add(b, c).unwrap()).unwrap();
                        let rhs = f.add(f.mul(a, b).unwrap(), f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                        let l = f.mul(f.mul(a, b).unwrap(), c).unwrap();
                        let r = f.mul(a, f.mul(b, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn from_coeffs_folds_high_powers() {
        let f = FiniteField::new(2, 2).unwrap();
        // a^2 = a + 1
        assert_eq!(f.from_coeffs(&[0, 0, 1]), f.from_coeffs(&[1, 1]));
    }
}
