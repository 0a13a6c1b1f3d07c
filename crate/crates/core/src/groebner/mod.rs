//! Gröbner bases and the ideal operations built on them.

mod engine;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub(crate) use engine::{Engine, Terms};

/// Limits on a single Gröbner computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs processed before giving up.
    pub max_pairs: u64,
    /// Largest total degree of an S-pair lcm.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 2_000_000,
            max_degree: 64,
        }
    }
}

type Cache = Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>;

/// An ideal given by generators, with Gröbner bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    budget: Budget,
    cache: Cache,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// Buchberger's algorithm: the reduced, monic Gröbner basis of `gens`
/// under `order`, sorted by descending leading term.
pub fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    check_rings(ring, gens)?;
    let engine = Engine::new(ring.field(), order);
    let input = gens.iter().map(|g| g.clone().into_raw_terms()).collect();
    let (gb, _) = engine.groebner(input, budget)?;
    Ok(gb
        .into_iter()
        .map(|t| Polynomial::from_raw_terms(ring, t))
        .collect())
}

/// Remainder of `f` on division by the list `divisors`, in the given order.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = f.ring();
    let engine = Engine::new(ring.field(), order);
    let f_terms = engine.normalize(f.clone().into_raw_terms());
    let d: Vec<Terms> = divisors
        .iter()
        .map(|g| engine.normalize(g.clone().into_raw_terms()))
        .collect();
    Polynomial::from_raw_terms(ring, engine.divide_by_list(f_terms, &d))
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let engine = Engine::new(first.ring().field(), order);
    let terms: Vec<Terms> = basis.iter().map(|g| g.clone().into_raw_terms()).collect();
    engine.is_groebner(&terms)
}

fn check_rings(ring: &Ring, gens: &[Polynomial]) -> Result<()> {
    if gens.iter().all(|g| g.ring().same_variables(ring)) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        check_rings(ring, &gens)?;
        Ok(Self::from_parts(ring, gens))
    }

    /// Parse each generator in `ring`.
    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<_>>()?;
        Ok(Self::from_parts(ring, gens))
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Self::from_parts(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Self::from_parts(ring, vec![Polynomial::one(ring)])
    }

    pub(crate) fn from_parts(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_ring(ring))
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            budget: Budget::default(),
            cache: Cache::default(),
        }
    }

    fn derived(&self, ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Ideal {
        Self::from_parts(ring, gens).with_budget(self.budget)
    }

    pub fn with_budget(mut self, budget: Budget) -> Ideal {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The same generators viewed in a ring with the same variables.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Ideal {
        let ideal = self.derived(ring, self.gens.clone());
        for (order, gb) in self.cache.lock().unwrap().iter() {
            let moved = gb.iter().map(|g| g.with_ring(ring)).collect();
            ideal.seed(order.clone(), moved);
        }
        ideal
    }

    fn seed(&self, order: MonomialOrder, gb: Vec<Polynomial>) {
        self.cache.lock().unwrap().insert(order, Arc::new(gb));
    }

    /// The order used for membership and equality tests.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.ring.nvars())
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.ring, &self.gens, order, &self.budget)?);
        self.cache.lock().unwrap().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    /// Canonical generators: the reduced Gröbner basis under the default order.
    pub fn reduced_basis(&self) -> Result<Arc<Vec<Polynomial>>> {
        self.groebner_basis(&self.default_order())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.reduced_basis()?;
        Ok(gb.len() == 1 && gb[0].total_degree() == 0)
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        let order = self.default_order();
        let gb = self.groebner_basis(&order)?;
        Ok(normal_form(&f.with_ring(&self.ring), &gb, &order))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals: identical reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !self.ring.same_variables(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let a = self.reduced_basis()?;
        let b = other.reduced_basis()?;
        Ok(a.len() == b.len() && a.iter().zip(b.iter()).all(|(f, g)| f == g))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_rings(&self.ring, &other.gens)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.derived(&self.ring, gens))
    }

    pub fn is_homogeneous(&self) -> Result<bool> {
        for g in &self.gens {
            if !self.ring.is_homogeneous(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I ∩ k[x_i : i ∉ drop]`, as an ideal of the subring on the kept
    /// variables (in their original relative order).
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let sub = self.ring.subring(&keep);
        self.eliminate_into(drop, &sub)
    }

    /// Elimination into a caller-supplied ring whose variables are the kept
    /// variables in order.
    pub fn eliminate_into(&self, drop: &[usize], target: &Arc<Ring>) -> Result<Ideal> {
        let n = self.ring.nvars();
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        if target.nvars() != keep.len() {
            return Err(Error::DimensionMismatch(format!(
                "target ring has {} variables, {} kept",
                target.nvars(),
                keep.len()
            )));
        }
        let order = MonomialOrder::elimination(n, drop);
        let gb = self.groebner_basis(&order)?;
        let mut map = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.support().iter().all(|i| !drop.contains(i)))
            .map(|g| g.remap(target, &map))
            .collect();
        let ideal = self.derived(target, kept.clone());
        // the surviving elements are the reduced basis for grevlex on the rest
        let mut sorted = kept;
        let inner = MonomialOrder::grevlex(target.nvars());
        sorted.sort_by(|a, b| {
            let la = a.leading(&inner).map(|t| t.0.clone());
            let lb = b.leading(&inner).map(|t| t.0.clone());
            inner.cmp(lb.as_ref().unwrap(), la.as_ref().unwrap())
        });
        let sorted = sorted.into_iter().map(|g| g.monic(&inner)).collect();
        ideal.seed(inner, sorted);
        Ok(ideal)
    }

    /// `I ∩ J` by eliminating `w` from `w·I + (1 − w)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_rings(&self.ring, &other.gens)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(&self.ring).with_budget(self.budget));
        }
        let n = self.ring.nvars();
        let ext = self.ring.extended(&[fresh_name(&self.ring, "w")]);
        let map: Vec<usize> = (0..n).collect();
        let w = ext.var(n);
        let one_minus_w = Polynomial::one(&ext).sub_poly(&w);
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|f| f.remap(&ext, &map).mul_poly(&w))
            .collect();
        gens.extend(
            other
                .gens
                .iter()
                .map(|g| g.remap(&ext, &map).mul_poly(&one_minus_w)),
        );
        self.derived(&ext, gens).eliminate_into(&[n], &self.ring)
    }

    /// `I : f = (I ∩ ⟨f⟩) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.with_ring(&self.ring);
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring).with_budget(self.budget));
        }
        if f.total_degree() == 0 {
            return Ok(self.clone());
        }
        let principal = self.derived(&self.ring, vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .reduced_basis()?
            .iter()
            .map(|h| {
                h.divide_exact(&f)
                    .expect("element of I ∩ ⟨f⟩ is divisible by f")
            })
            .collect();
        Ok(self.derived(&self.ring, gens))
    }

    /// `I : D = ⋂_b (I : b)` over the generators of `D`.
    pub fn colon(&self, d: &Ideal) -> Result<Ideal> {
        check_rings(&self.ring, &d.gens)?;
        let mut acc: Option<Ideal> = None;
        for b in &d.gens {
            let part = self.colon_poly(b)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring).with_budget(self.budget)))
    }

    /// `I : D^∞`, iterating the colon until it stabilizes.
    pub fn saturate(&self, d: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(d)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I : f^∞` by eliminating `t` from `I + ⟨1 − t·f⟩`.
    pub fn saturate_poly(&self, f: &Polynomial) -> Result<Ideal> {
        let n = self.ring.nvars();
        let ext = self.ring.extended(&[fresh_name(&self.ring, "t")]);
        let map: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.remap(&ext, &map)).collect();
        let tf = ext.var(n).mul_poly(&f.remap(&ext, &map));
        gens.push(Polynomial::one(&ext).sub_poly(&tf));
        self.derived(&ext, gens).eliminate_into(&[n], &self.ring)
    }

    /// Standard monomials of degree `alpha`: the degree-α monomials that are
    /// not leading terms of elements of `I`.
    pub fn quotient_graded_basis(&self, alpha: &[i64]) -> Result<Vec<Monomial>> {
        if self.ring.beta().is_none() {
            return Err(Error::NotGraded);
        }
        if !self.is_homogeneous()? {
            return Err(Error::NonHomogeneousIdeal);
        }
        let order = self.default_order();
        let gb = self.groebner_basis(&order)?;
        let leads: Vec<Monomial> = gb
            .iter()
            .filter_map(|g| g.leading(&order).map(|t| t.0.clone()))
            .collect();
        Ok(self
            .ring
            .graded_monomial_basis(alpha)?
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect())
    }

    /// A minimal homogeneous generating set, drawn from the reduced Gröbner
    /// basis: elements are taken by increasing degree and kept only if not
    /// already in the ideal of those kept so far. Each is made monic under
    /// the printing order.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if self.ring.beta().is_none() {
            return Err(Error::NotGraded);
        }
        if !self.is_homogeneous()? {
            return Err(Error::NonHomogeneousIdeal);
        }
        let weight = |g: &Polynomial| -> Result<i64> {
            let m = g.monomials().next().expect("nonzero");
            Ok(self.ring.beta_degree(m)?.iter().sum())
        };
        let mut candidates = Vec::new();
        for g in self.reduced_basis()?.iter() {
            candidates.push((weight(g)?, g.clone()));
        }
        candidates.sort_by_key(|(w, _)| *w);
        let lex = MonomialOrder::lex(self.ring.nvars());
        let mut kept: Vec<Polynomial> = Vec::new();
        for (_, g) in candidates {
            let so_far = self.derived(&self.ring, kept.clone());
            if !so_far.contains(&g)? {
                kept.push(g.monic(&lex));
            }
        }
        Ok(kept)
    }

    /// Generators in canonical printed form, sorted.
    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        let mut out: Vec<String> = self
            .reduced_basis()?
            .iter()
            .map(|g| g.to_string())
            .collect();
        out.sort();
        Ok(out)
    }
}

fn fresh_name(ring: &Ring, stem: &str) -> String {
    let mut name = format!("_{stem}");
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}
