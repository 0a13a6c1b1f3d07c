//! Integer lattices, supports, and the binomial ideals they define.

pub mod hnf;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::poly::{Monomial, Polynomial, Ring};

pub use hnf::{hermite_normal_form, hnf_contains, integer_kernel, rank};

/// A sublattice of `Z^n`, stored by its Hermite normal form basis, so two
/// lattices are equal iff their bases are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntLattice {
    ambient: usize,
    basis: Vec<Vec<i64>>,
}

impl IntLattice {
    /// The lattice spanned by `gens` in `Z^ambient`.
    pub fn spanned_by(ambient: usize, gens: &[Vec<i64>]) -> Result<IntLattice> {
        if let Some(g) = gens.iter().find(|g| g.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in Z^{ambient}",
                g.len()
            )));
        }
        let basis = if gens.is_empty() {
            Vec::new()
        } else {
            hermite_normal_form(gens)
        };
        Ok(IntLattice { ambient, basis })
    }

    /// `ker(β) ∩ Z^r`; fails unless β has full row rank.
    pub fn kernel_of(beta: &[Vec<i64>]) -> Result<IntLattice> {
        let d = beta.len();
        let rk = rank(beta);
        if rk != d {
            return Err(Error::RankDeficient {
                rank: rk,
                expected: d,
            });
        }
        Ok(Self::kernel_unchecked(beta))
    }

    /// Kernel of a possibly rank-deficient matrix.
    pub fn kernel_unchecked(beta: &[Vec<i64>]) -> IntLattice {
        let ambient = beta.first().map_or(0, |row| row.len());
        IntLattice {
            ambient,
            basis: integer_kernel(beta),
        }
    }

    /// `L_{β(ε)}`: the kernel of the columns of β indexed by `support`.
    pub fn restricted_kernel(beta: &[Vec<i64>], support: &Support) -> Result<IntLattice> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        let cols = beta
            .iter()
            .map(|row| support.iter().map(|j| row[j]).collect::<Vec<i64>>())
            .collect::<Vec<_>>();
        Ok(Self::kernel_unchecked(&cols))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.ambient && hnf_contains(&self.basis, v)
    }

    /// `s·L`.
    pub fn scaled(&self, s: i64) -> IntLattice {
        let gens: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|row| row.iter().map(|&x| x * s).collect())
            .collect();
        IntLattice::spanned_by(self.ambient, &gens).expect("same ambient dimension")
    }
}

/// A set of variable indices (0-based), kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Support(Vec<usize>);

impl Support {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Support {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Support(v)
    }

    pub fn full(r: usize) -> Support {
        Support((0..r).collect())
    }

    /// Indices whose bit is set in `mask`.
    pub fn from_mask(mask: u64, r: usize) -> Support {
        Support((0..r).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Support) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// `x^ε`: the product of the variables in the support.
    pub fn monomial(&self, nvars: usize) -> Monomial {
        let mut exps = vec![0u16; nvars];
        for &i in &self.0 {
            exps[i] = 1;
        }
        Monomial::from_exps(&exps)
    }
}

/// Split `m` into `(m⁺, m⁻)` placed on the variables `vars` of an
/// `nvars`-variable ring.
fn split_exponent(m: &[i64], vars: &[usize], nvars: usize) -> Result<(Monomial, Monomial)> {
    let mut plus = vec![0u64; nvars];
    let mut minus = vec![0u64; nvars];
    for (&e, &v) in m.iter().zip(vars) {
        if e > 0 {
            plus[v] = e as u64;
        } else {
            minus[v] = e.unsigned_abs();
        }
    }
    let plus = Monomial::try_from_exps(&plus).ok_or(Error::ExponentOverflow)?;
    let minus = Monomial::try_from_exps(&minus).ok_or(Error::ExponentOverflow)?;
    Ok((plus, minus))
}

/// The lattice ideal `I_{sL} = ⟨x^{m⁺} − x^{m⁻} : m ∈ sL⟩` in `ring`, with
/// coordinate `i` of the lattice living on variable `vars[i]`.
///
/// Computed as the basis binomials saturated by the product of `vars`.
pub fn lattice_ideal(
    ring: &Arc<Ring>,
    lattice: &IntLattice,
    scale: i64,
    vars: &[usize],
    budget: Budget,
) -> Result<Ideal> {
    let chi = vec![1u32; lattice.rank()];
    character_ideal(ring, &lattice.scaled(scale), &chi, vars, budget)
}

/// The partial-character ideal `⟨x^{m⁺} − χ(m)·x^{m⁻} : m ∈ L⟩`, where the
/// character is given by its (nonzero, raw) values on the HNF basis of `L`.
pub fn character_ideal(
    ring: &Arc<Ring>,
    lattice: &IntLattice,
    chi: &[u32],
    vars: &[usize],
    budget: Budget,
) -> Result<Ideal> {
    if vars.len() != lattice.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "lattice in Z^{} placed on {} variables",
            lattice.ambient(),
            vars.len()
        )));
    }
    binomial_saturation(ring, lattice.basis(), chi, vars, budget)
}

/// `⟨x^{m⁺} − χ_m·x^{m⁻} : m ∈ gens⟩ : (∏ vars)^∞` for an arbitrary
/// generating set of a lattice; the result depends only on the lattice and
/// the character, not on the generators chosen.
pub fn binomial_saturation(
    ring: &Arc<Ring>,
    gens: &[Vec<i64>],
    chi: &[u32],
    vars: &[usize],
    budget: Budget,
) -> Result<Ideal> {
    if gens.iter().any(|m| m.len() != vars.len()) {
        return Err(Error::DimensionMismatch(format!(
            "lattice vectors must have {} entries",
            vars.len()
        )));
    }
    if chi.len() != gens.len() || chi.contains(&0) {
        return Err(Error::DimensionMismatch(
            "one nonzero character value per generator".into(),
        ));
    }
    let n = ring.nvars();
    let field = ring.field();
    let mut binomials = Vec::with_capacity(gens.len());
    for (m, &c) in gens.iter().zip(chi) {
        let (plus, minus) = split_exponent(m, vars, n)?;
        binomials.push(Polynomial::from_raw_terms(
            ring,
            vec![(plus, 1), (minus, field.neg_raw(c))],
        ));
    }
    let ideal = Ideal::new(ring, binomials)?.with_budget(budget);
    if gens.is_empty() {
        return Ok(ideal);
    }
    let mut product = vec![0u16; n];
    for &v in vars {
        product[v] = 1;
    }
    ideal.saturate_poly(&Polynomial::monomial(
        ring,
        Monomial::from_exps(&product),
        1,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FiniteField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hirzebruch_beta(ell: i64) -> Vec<Vec<i64>> {
        vec![vec![1, 0, 1, ell], vec![0, 1, 0, 1]]
    }

    #[test]
    fn kernel_rank_checks() {
        assert!(matches!(
            IntLattice::kernel_of(&[vec![1, 2], vec![2, 4]]),
            Err(Error::RankDeficient {
                rank: 1,
                expected: 2
            })
        ));
        let l = IntLattice::kernel_of(&hirzebruch_beta(2)).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(!l.contains(&[1, 2, -3, 0]));
        assert!(l.contains(&[1, 0, -1, 0]));
        assert!(l.contains(&[0, 1, 2, -1]));
    }

    #[test]
    fn restricted_kernels() {
        let beta = hirzebruch_beta(3);
        let l = IntLattice::restricted_kernel(&beta, &Support::new([0, 2])).unwrap();
        assert_eq!(l.basis(), &[vec![1, -1]]);
        let l = IntLattice::restricted_kernel(&beta, &Support::new([1, 3])).unwrap();
        assert_eq!(l.rank(), 0);
        assert!(matches!(
            IntLattice::restricted_kernel(&beta, &Support::default()),
            Err(Error::EmptySupport)
        ));
    }

    #[test]
    fn scaled_lattice() {
        let l = IntLattice::spanned_by(2, &[vec![1, -1]]).unwrap();
        let s = l.scaled(4);
        assert!(s.contains(&[4, -4]));
        assert!(!s.contains(&[1, -1]));
    }

    fn ring(p: u64, r: usize) -> Arc<Ring> {
        Ring::ungraded(
            Arc::new(FiniteField::new(p, 1).unwrap()),
            (1..=r).map(|i| format!("x_{i}")).collect(),
        )
    }

    #[test]
    fn twisted_cubic_is_saturated_lattice_ideal() {
        // kernel of (3,2,1,0; 0,1,2,3) gives the rational normal curve ideal
        let beta = vec![vec![3, 2, 1, 0], vec![0, 1, 2, 3]];
        let l = IntLattice::kernel_of(&beta).unwrap();
        let r = ring(5, 4);
        let i = lattice_ideal(&r, &l, 1, &[0, 1, 2, 3], Budget::default()).unwrap();
        let expected = Ideal::parse(
            &r,
            &["x_1*x_3 - x_2^2", "x_2*x_4 - x_3^2", "x_1*x_4 - x_2*x_3"],
        )
        .unwrap();
        assert!(i.equals(&expected).unwrap());
    }

    #[test]
    fn character_ideal_of_a_point() {
        // L = Z(1,-1) on (x_1, x_2), χ = 2: x_1 - 2 x_2
        let r = ring(5, 2);
        let l = IntLattice::spanned_by(2, &[vec![1, -1]]).unwrap();
        let i = character_ideal(&r, &l, &[2], &[0, 1], Budget::default()).unwrap();
        assert!(i
            .equals(&Ideal::parse(&r, &["x_1 - 2*x_2"]).unwrap())
            .unwrap());
    }

    fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
        let mut u: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for _ in 0..6 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a == b {
                u.swap(0, n - 1);
                continue;
            }
            let k = rng.gen_range(-2..=2);
            let row = u[b].clone();
            for (x, y) in u[a].iter_mut().zip(row) {
                *x += k * y;
            }
        }
        u
    }

    #[test]
    fn lattice_ideal_ignores_choice_of_basis() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let beta = hirzebruch_beta(2);
        let l = IntLattice::kernel_of(&beta).unwrap();
        let r = ring(3, 4);
        let reference = lattice_ideal(&r, &l, 2, &[0, 1, 2, 3], Budget::default()).unwrap();
        for _ in 0..3 {
            let u = random_unimodular(2, &mut rng);
            let other: Vec<Vec<i64>> = u
                .iter()
                .map(|row| {
                    (0..4)
                        .map(|j| row.iter().zip(l.basis()).map(|(c, b)| c * b[j]).sum())
                        .collect()
                })
                .collect();
            assert_eq!(IntLattice::spanned_by(4, &other).unwrap(), l);
            let scaled: Vec<Vec<i64>> = other
                .iter()
                .map(|v| v.iter().map(|x| 2 * x).collect())
                .collect();
            let i2 = binomial_saturation(&r, &scaled, &[1, 1], &[0, 1, 2, 3], Budget::default())
                .unwrap();
            assert!(i2.equals(&reference).unwrap());
        }
    }
}
