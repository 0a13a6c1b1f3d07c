//! Vanishing ideals of point sets in toric quotients `A^r_G(F_q)` and
//! `X(F_q) = (F_q^r ∖ V(B)) / G`.
//!
//! Two routes lead to the ideal of all of `A^r_G(F_q)`: eliminating the
//! auxiliary variables of a rational parameterization, and summing the
//! scaled lattice ideals of the cells `A^r(ε)`. The ideal of the toric
//! variety itself is then the colon by the irrelevant ideal `B`.

mod named;
mod orbits;

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FiniteField};
use crate::groebner::{Budget, Ideal};
use crate::lattice::{self, IntLattice, Support};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub use named::{Construction, ToricData};
pub use orbits::{
    enumerate_orbit_points, orbit_classes, region_points, torus_orbit_representatives, OrbitPoint,
    Region, DEFAULT_MAX_POINTS,
};

/// Subsets of at most this many variables are enumerated by the cellular
/// construction.
pub const MAX_CELLULAR_VARS: usize = 16;

/// Parameter space of a rational map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `t ∈ F_q^s`.
    Affine,
    /// `t ∈ (F_q^*)^s`.
    Torus,
}

/// `t ↦ (f_1(t)/g_1(t), …, f_r(t)/g_r(t))` on the points where no `g_j`
/// vanishes.
#[derive(Debug, Clone)]
pub struct RationalMap {
    params: Arc<Ring>,
    f: Vec<Polynomial>,
    g: Vec<Polynomial>,
    domain: Domain,
}

impl RationalMap {
    /// Parse numerators and denominators in the variables `y_1..y_s`.
    pub fn parse(
        field: Arc<FiniteField>,
        s: usize,
        f: &[&str],
        g: &[&str],
        domain: Domain,
    ) -> Result<RationalMap> {
        let params = Ring::ungraded(field, (1..=s).map(|i| format!("y_{i}")).collect());
        let f = f
            .iter()
            .map(|t| params.parse(t))
            .collect::<Result<Vec<_>>>()?;
        let g = g
            .iter()
            .map(|t| params.parse(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, f, g, domain)
    }

    pub fn new(
        params: Arc<Ring>,
        f: Vec<Polynomial>,
        g: Vec<Polynomial>,
        domain: Domain,
    ) -> Result<RationalMap> {
        if f.len() != g.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} numerators but {} denominators",
                f.len(),
                g.len()
            )));
        }
        if f.iter()
            .chain(&g)
            .any(|p| !p.ring().same_variables(&params))
        {
            return Err(Error::RingMismatch);
        }
        if let Some(j) = g.iter().position(|p| p.is_zero()) {
            return Err(Error::InvalidDenominator(j + 1));
        }
        Ok(RationalMap {
            params,
            f,
            g,
            domain,
        })
    }

    /// `f_i = y_i`, `g_i = 1`: its image is all of `F_q^r` (or the torus).
    pub fn identity(field: Arc<FiniteField>, r: usize, domain: Domain) -> RationalMap {
        let params = Ring::ungraded(field, (1..=r).map(|i| format!("y_{i}")).collect());
        let f = (0..r).map(|i| params.var(i)).collect();
        let g = vec![Polynomial::one(&params); r];
        RationalMap {
            params,
            f,
            g,
            domain,
        }
    }

    pub fn param_ring(&self) -> &Arc<Ring> {
        &self.params
    }

    /// Number of parameters `s`.
    pub fn s(&self) -> usize {
        self.params.nvars()
    }

    /// Number of coordinates `r`.
    pub fn r(&self) -> usize {
        self.f.len()
    }

    pub fn numerators(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn denominators(&self) -> &[Polynomial] {
        &self.g
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    fn has_denominators(&self) -> bool {
        self.g
            .iter()
            .any(|g| g.total_degree() > 0 || g.raw_terms().any(|(_, c)| c != 1))
    }

    /// The distinct image points, sorted.
    pub fn image(&self, max_points: u64) -> Result<Vec<Vec<u32>>> {
        let field = self.params.field();
        let q = field.order() as u64;
        let values: Vec<u32> = match self.domain {
            Domain::Affine => (0..field.order()).collect(),
            Domain::Torus => (1..field.order()).collect(),
        };
        let s = self.s();
        let count = (values.len() as u64).checked_pow(s as u32);
        if count.is_none_or(|c| c > max_points) {
            return Err(Error::BudgetExceeded(format!(
                "{q}^{s} parameter values exceed {max_points}"
            )));
        }
        let mut out = Vec::new();
        for t in odometer(&values, s) {
            let mut x = Vec::with_capacity(self.r());
            let mut defined = true;
            for (f, g) in self.f.iter().zip(&self.g) {
                let den = g.evaluate_raw(&t);
                if den == 0 {
                    defined = false;
                    break;
                }
                x.push(field.mul_raw(f.evaluate_raw(&t), field.inv_raw(den)));
            }
            if defined {
                out.push(x);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// All tuples of length `n` over `values`, last coordinate fastest (so the
/// tuples come out in lexicographic order when `values` is sorted).
pub(crate) fn odometer(values: &[u32], n: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    let mut idx = vec![0usize; n];
    let mut done = values.is_empty() && n > 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let item: Vec<u32> = idx.iter().map(|&i| values[i]).collect();
        done = true;
        for k in (0..n).rev() {
            idx[k] += 1;
            if idx[k] < values.len() {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        Some(item)
    })
}

fn require_beta(ring: &Ring) -> Result<&[Vec<i64>]> {
    ring.beta().ok_or(Error::NotGraded)
}

/// `I(Y_G(f, g)) = J ∩ S` for
/// `J = ⟨x_j g_j − f_j z^{β_j}, y_i^q − y_i, w·g_1⋯g_r − 1⟩`
/// (with `y_i^{q−1} − 1` on the torus, and no `w` when every `g_j = 1`).
pub fn parameterized_vanishing_ideal(
    ring: &Arc<Ring>,
    map: &RationalMap,
    budget: Budget,
) -> Result<Ideal> {
    let beta = require_beta(ring)?;
    let field = ring.field();
    if !map.params.field().eq(field) {
        return Err(Error::FieldMismatch {
            left: field.order(),
            right: map.params.field().order(),
        });
    }
    let r = ring.nvars();
    if map.r() != r {
        return Err(Error::DimensionMismatch(format!(
            "map has {} coordinates, ring has {r} variables",
            map.r()
        )));
    }
    let s = map.s();
    let d = beta.len();
    let with_w = map.has_denominators();
    let mut extra: Vec<String> = (1..=s).map(|i| format!("_y{i}")).collect();
    extra.extend((1..=d).map(|i| format!("_z{i}")));
    if with_w {
        extra.push("_w".into());
    }
    let big = ring.extended(&extra);
    let n = big.nvars();
    let y_map: Vec<usize> = (r..r + s).collect();
    let lift = |p: &Polynomial| p.remap(&big, &y_map);

    let mut gens = Vec::new();
    for j in 0..r {
        let mut z = vec![0u64; n];
        for (i, row) in beta.iter().enumerate() {
            z[r + s + i] = row[j] as u64;
        }
        let z = Monomial::try_from_exps(&z).ok_or(Error::ExponentOverflow)?;
        let lhs = big.var(j).mul_poly(&lift(&map.g[j]));
        let rhs = lift(&map.f[j]).mul_monomial(&z);
        gens.push(lhs.sub_poly(&rhs));
    }
    let q = field.order();
    for i in 0..s {
        let y = r + i;
        let p = match map.domain {
            Domain::Affine => {
                Polynomial::binomial(&big, Monomial::var(n, y, q as u16), Monomial::var(n, y, 1))
            }
            Domain::Torus => {
                Polynomial::binomial(&big, Monomial::var(n, y, (q - 1) as u16), Monomial::one(n))
            }
        };
        gens.push(p);
    }
    if with_w {
        let prod = map
            .g
            .iter()
            .fold(Polynomial::one(&big), |acc, g| acc.mul_poly(&lift(g)));
        gens.push(
            big.var(n - 1)
                .mul_poly(&prod)
                .sub_poly(&Polynomial::one(&big)),
        );
    }
    let drop: Vec<usize> = (r..n).collect();
    Ideal::new(&big, gens)?
        .with_budget(budget)
        .eliminate_into(&drop, ring)
}

/// The binomial ideal of `T_G·[1_ε]` restricted to `S[ε]`:
/// `I_{(q−1)L_{β(ε)}}`, or `None` when the lattice is trivial.
fn scaled_cell_lattice_ideal(
    ring: &Arc<Ring>,
    eps: &Support,
    budget: Budget,
) -> Result<Option<Ideal>> {
    let beta = require_beta(ring)?;
    let lattice = IntLattice::restricted_kernel(beta, eps)?;
    if lattice.rank() == 0 {
        return Ok(None);
    }
    let q = ring.field().order() as i64;
    lattice::lattice_ideal(ring, &lattice, q - 1, eps.indices(), budget).map(Some)
}

/// `I(A^r_G(F_q)) = Σ_{ε ≠ ∅} x^ε · I_{(q−1)L_{β(ε)}}`, with generators that
/// are divisible by other generators dropped.
pub fn affine_cellular_ideal(ring: &Arc<Ring>, budget: Budget) -> Result<Ideal> {
    require_beta(ring)?;
    let r = ring.nvars();
    if r > MAX_CELLULAR_VARS {
        return Err(Error::TooManyVariables {
            r,
            cap: MAX_CELLULAR_VARS,
        });
    }
    let parts: Vec<Vec<Polynomial>> = (1u64..1 << r)
        .into_par_iter()
        .map(|mask| {
            let eps = Support::from_mask(mask, r);
            let Some(ideal) = scaled_cell_lattice_ideal(ring, &eps, budget)? else {
                return Ok(Vec::new());
            };
            let xe = eps.monomial(r);
            Ok(ideal
                .reduced_basis()?
                .iter()
                .map(|g| g.mul_monomial(&xe))
                .collect())
        })
        .collect::<Result<_>>()?;
    let gens = prune_divisible(parts.into_iter().flatten().collect());
    Ok(Ideal::new(ring, gens)?.with_budget(budget))
}

/// Drop every generator that is a polynomial multiple of another one;
/// the survivors are made monic (lex) and sorted.
pub fn prune_divisible(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return gens;
    };
    let lex = MonomialOrder::lex(first.ring().nvars());
    let mut gens: Vec<Polynomial> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(&lex))
        .collect();
    gens.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| a.raw_terms().cmp(b.raw_terms()))
    });
    gens.dedup();
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|h| g.divide_exact(h).is_some()) {
            kept.push(g);
        }
    }
    kept
}

/// `I(T_G·[1_ε]) = m(ε̌) + S·I_{(q−1)L_{β(ε)}}`.
pub fn cell_ideal(ring: &Arc<Ring>, eps: &Support, budget: Budget) -> Result<Ideal> {
    if eps.is_empty() {
        return Err(Error::EmptySupport);
    }
    if eps.iter().any(|i| i >= ring.nvars()) {
        return Err(Error::DimensionMismatch(format!(
            "support {:?} in {} variables",
            eps.indices(),
            ring.nvars()
        )));
    }
    let mut gens: Vec<Polynomial> = (0..ring.nvars())
        .filter(|&i| !eps.contains(i))
        .map(|i| ring.var(i))
        .collect();
    if let Some(ideal) = scaled_cell_lattice_ideal(ring, eps, budget)? {
        gens.extend(ideal.reduced_basis()?.iter().cloned());
    }
    Ok(Ideal::new(ring, gens)?.with_budget(budget))
}

/// `x^m(P)` for a point that is nonzero on the support of `m`.
pub(crate) fn character_value(
    field: &FiniteField,
    point: &[u32],
    m: &[i64],
    vars: &[usize],
) -> u32 {
    m.iter()
        .zip(vars)
        .filter(|(&e, _)| e != 0)
        .fold(1, |acc, (&e, &v)| {
            field.mul_raw(acc, field.pow_raw(point[v], e))
        })
}

/// `I([P]) = m(ε̌) + S·I_{χ_P, L_{β(ε)}}` where `ε` is the support of `P` and
/// `χ_P(m) = x^m(P)`.
pub fn point_orbit_ideal(
    ring: &Arc<Ring>,
    point: &[FieldElement],
    budget: Budget,
) -> Result<Ideal> {
    let beta = require_beta(ring)?;
    let field = ring.field();
    let r = ring.nvars();
    if point.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, ring has {r} variables",
            point.len()
        )));
    }
    if let Some(bad) = point.iter().find(|e| e.order() != field.order()) {
        return Err(Error::FieldMismatch {
            left: field.order(),
            right: bad.order(),
        });
    }
    let raw: Vec<u32> = point.iter().map(|e| e.raw()).collect();
    let eps = Support::new((0..r).filter(|&i| raw[i] != 0));
    let mut gens: Vec<Polynomial> = (0..r)
        .filter(|&i| !eps.contains(i))
        .map(|i| ring.var(i))
        .collect();
    if !eps.is_empty() {
        let lattice = IntLattice::restricted_kernel(beta, &eps)?;
        if lattice.rank() > 0 {
            let chi: Vec<u32> = lattice
                .basis()
                .iter()
                .map(|m| character_value(field, &raw, m, eps.indices()))
                .collect();
            let ideal = lattice::character_ideal(ring, &lattice, &chi, eps.indices(), budget)?;
            gens.extend(ideal.reduced_basis()?.iter().cloned());
        }
    }
    Ok(Ideal::new(ring, gens)?.with_budget(budget))
}

/// Which route computes `I(A^r_G(F_q))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// Eliminate the identity parameterization.
    Elimination,
    /// Sum of scaled cell lattice ideals.
    Cellular,
}

/// `I(A^r_G(F_q))` along the chosen route.
pub fn affine_vanishing_ideal(ring: &Arc<Ring>, path: Path, budget: Budget) -> Result<Ideal> {
    match path {
        Path::Cellular => affine_cellular_ideal(ring, budget),
        Path::Elimination => {
            let map = RationalMap::identity(ring.field().clone(), ring.nvars(), Domain::Affine);
            parameterized_vanishing_ideal(ring, &map, budget)
        }
    }
}

/// `I(X(F_q)) = I(A^r_G(F_q)) : B`.
pub fn toric_vanishing_ideal(toric: &ToricData, path: Path, budget: Budget) -> Result<Ideal> {
    let affine = affine_vanishing_ideal(toric.ring(), path, budget)?;
    affine.colon(&toric.irrelevant_ideal())
}

/// `I(X(f, g)) = I(Y_G(f, g)) : B` for the image of a rational map.
pub fn toric_image_vanishing_ideal(
    toric: &ToricData,
    map: &RationalMap,
    budget: Budget,
) -> Result<Ideal> {
    parameterized_vanishing_ideal(toric.ring(), map, budget)?.colon(&toric.irrelevant_ideal())
}

/// Whether a single colon by `B` already equals the saturation `I : B^∞`.
pub fn colon_is_saturation(ideal: &Ideal, colon: &Ideal, b: &Ideal) -> Result<bool> {
    ideal.saturate(b)?.equals(colon)
}

/// Whether every generator of `ideal` vanishes at every point (raw values).
pub fn vanishes_on(ideal: &Ideal, points: &[Vec<u32>]) -> bool {
    vanishing_failures(ideal.gens(), points).is_empty()
}

/// `(generator index, point index)` pairs where a generator is nonzero.
pub fn vanishing_failures(gens: &[Polynomial], points: &[Vec<u32>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        for (pi, p) in points.iter().enumerate() {
            if g.evaluate_raw(p) != 0 {
                out.push((gi, pi));
            }
        }
    }
    out
}
