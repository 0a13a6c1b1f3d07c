//! Buchberger's algorithm over `GF(q)` with the normal selection strategy
//! and the Gebauer–Möller pair criteria.
//!
//! Polynomials inside the engine are plain term vectors sorted descending
//! under the active monomial order, with monic leading terms once they enter
//! the basis.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::FiniteField;
use crate::poly::{Monomial, MonomialOrder};

use super::Budget;

pub(crate) type Terms = Vec<(Monomial, u32)>;

/// Bit `i` set iff variable `i mod 64` occurs; a cheap divisibility filter.
fn divmask(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1 << (i % 64))
}

pub(crate) struct Engine<'a> {
    pub field: &'a FiniteField,
    pub order: &'a MonomialOrder,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Stats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
}

struct Basis {
    polys: Vec<Terms>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

impl Basis {
    fn lead(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }
}

impl<'a> Engine<'a> {
    pub fn new(field: &'a FiniteField, order: &'a MonomialOrder) -> Self {
        Engine { field, order }
    }

    pub fn sort(&self, terms: &mut Terms) {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
    }

    /// Sort, combine like terms, drop zeros.
    pub fn normalize(&self, mut terms: Terms) -> Terms {
        self.sort(&mut terms);
        let mut out: Terms = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add_raw(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        out
    }

    pub fn make_monic(&self, terms: &mut Terms) {
        if let Some(&(_, lc)) = terms.first() {
            if lc != 1 {
                let inv = self.field.inv_raw(lc);
                for (_, c) in terms.iter_mut() {
                    *c = self.field.mul_raw(*c, inv);
                }
            }
        }
    }

    /// `f[from..] - c·m·g`, merged in order.
    fn sub_mul(&self, f: &[(Monomial, u32)], c: u32, m: &Monomial, g: &[(Monomial, u32)]) -> Terms {
        let neg = self.field.neg_raw(c);
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut next_g = g.first().map(|(t, _)| t.mul(m));
        while i < f.len() {
            let Some(gm) = next_g.as_ref() else { break };
            match self.order.cmp(&f[i].0, gm) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((next_g.take().unwrap(), self.field.mul_raw(g[j].1, neg)));
                    j += 1;
                    next_g = g.get(j).map(|(t, _)| t.mul(m));
                }
                Ordering::Equal => {
                    let v = self.field.add_raw(f[i].1, self.field.mul_raw(g[j].1, neg));
                    if v != 0 {
                        out.push((f[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    next_g = g.get(j).map(|(t, _)| t.mul(m));
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        if let Some(gm) = next_g {
            out.push((gm, self.field.mul_raw(g[j].1, neg)));
            for (t, gc) in &g[j + 1..] {
                out.push((t.mul(m), self.field.mul_raw(*gc, neg)));
            }
        }
        out
    }

    fn find_reducer(&self, m: &Monomial, basis: &Basis) -> Option<usize> {
        let mask = divmask(m);
        (0..basis.polys.len())
            .find(|&k| basis.active[k] && basis.masks[k] & !mask == 0 && basis.lead(k).divides(m))
    }

    /// Full reduction of `f` by the active elements of a monic basis.
    fn reduce_full(&self, f: Terms, basis: &Basis) -> Terms {
        let mut rem: Terms = Vec::new();
        let mut p = f;
        let mut start = 0;
        while start < p.len() {
            let (m, c) = (&p[start].0, p[start].1);
            match self.find_reducer(m, basis) {
                Some(k) => {
                    let g = &basis.polys[k];
                    let q = g[0].0.quotient_of(m).expect("reducer divides");
                    // leading terms cancel; subtract the tail only
                    p = self.sub_mul(&p[start + 1..], c, &q, &g[1..]);
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    /// Division of `f` by an arbitrary list (not necessarily monic or a
    /// Gröbner basis); the first divisor whose leading term divides wins.
    pub fn divide_by_list(&self, f: Terms, divisors: &[Terms]) -> Terms {
        let divisors: Vec<&Terms> = divisors.iter().filter(|d| !d.is_empty()).collect();
        let mut rem: Terms = Vec::new();
        let mut p = f;
        let mut start = 0;
        while start < p.len() {
            let (m, c) = (&p[start].0, p[start].1);
            let hit = divisors.iter().find(|g| g[0].0.divides(m));
            match hit {
                Some(g) => {
                    let q = g[0].0.quotient_of(m).unwrap();
                    let coeff = self.field.mul_raw(c, self.field.inv_raw(g[0].1));
                    p = self.sub_mul(&p[start + 1..], coeff, &q, &g[1..]);
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    fn spoly(&self, f: &Terms, g: &Terms, lcm: &Monomial) -> Terms {
        let uf = f[0].0.quotient_of(lcm).unwrap();
        let ug = g[0].0.quotient_of(lcm).unwrap();
        let fu: Terms = f[1..].iter().map(|(m, c)| (m.mul(&uf), *c)).collect();
        self.sub_mul(&fu, 1, &ug, &g[1..])
    }

    fn select(&self, pairs: &mut Vec<Pair>) -> Pair {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let better = a
                .degree
                .cmp(&b.degree)
                .then_with(|| self.order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if better == Ordering::Less {
                best = k;
            }
        }
        pairs.swap_remove(best)
    }

    /// Gebauer–Möller update after appending basis element `h`.
    fn update(&self, basis: &mut Basis, pairs: &mut Vec<Pair>, h: usize) {
        let lt_h = basis.lead(h).clone();
        let candidates: Vec<Pair> = (0..h)
            .filter(|&g| basis.active[g])
            .map(|g| {
                let lcm = lt_h.lcm(basis.lead(g));
                let degree = lcm.total_degree();
                Pair {
                    i: g,
                    j: h,
                    lcm,
                    degree,
                }
            })
            .collect();

        // Chain criterion among the new pairs.
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = lt_h.is_coprime(basis.lead(p.i));
            let dominated = candidates
                .iter()
                .enumerate()
                .any(|(k, o)| k != idx && o.lcm.divides(&p.lcm) && (o.lcm != p.lcm || k < idx));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        // Product criterion; also drop duplicates with equal lcm.
        let mut fresh: Vec<Pair> = Vec::new();
        for p in kept {
            if lt_h.is_coprime(basis.lead(p.i)) {
                continue;
            }
            if fresh.iter().any(|o| o.lcm == p.lcm) {
                continue;
            }
            fresh.push(p);
        }
        // Old pairs made redundant by h.
        pairs.retain(|p| {
            !(lt_h.divides(&p.lcm)
                && lt_h.lcm(basis.lead(p.i)) != p.lcm
                && lt_h.lcm(basis.lead(p.j)) != p.lcm)
        });
        pairs.extend(fresh);
        for g in 0..h {
            if basis.active[g] && lt_h.divides(basis.lead(g)) {
                basis.active[g] = false;
            }
        }
    }

    /// Reduced Gröbner basis of the ideal generated by `gens`, monic, sorted
    /// by descending leading term.
    pub fn groebner(&self, gens: Vec<Terms>, budget: &Budget) -> Result<(Vec<Terms>, Stats)> {
        let mut stats = Stats::default();
        let mut basis = Basis {
            polys: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
        };
        let mut pairs: Vec<Pair> = Vec::new();
        let mut input: Vec<Terms> = gens
            .into_iter()
            .map(|g| self.normalize(g))
            .filter(|g| !g.is_empty())
            .collect();
        // small leading terms first
        input.sort_by(|a, b| self.order.cmp(&a[0].0, &b[0].0));
        for g in input {
            let mut h = self.reduce_full(g, &basis);
            if h.is_empty() {
                continue;
            }
            self.make_monic(&mut h);
            if h[0].0.is_one() {
                return Ok((vec![h], stats));
            }
            self.push(&mut basis, &mut pairs, h);
        }
        while !pairs.is_empty() {
            let pair = self.select(&mut pairs);
            stats.pairs_processed += 1;
            if stats.pairs_processed > budget.max_pairs {
                return Err(Error::ResourceBudgetExceeded(format!(
                    "more than {} S-pairs",
                    budget.max_pairs
                )));
            }
            if pair.degree > budget.max_degree {
                return Err(Error::ResourceBudgetExceeded(format!(
                    "S-pair of degree {} exceeds the cap {}",
                    pair.degree, budget.max_degree
                )));
            }
            let s = self.spoly(&basis.polys[pair.i], &basis.polys[pair.j], &pair.lcm);
            let mut h = self.reduce_full(s, &basis);
            if h.is_empty() {
                stats.zero_reductions += 1;
                continue;
            }
            self.make_monic(&mut h);
            if h[0].0.is_one() {
                return Ok((vec![h], stats));
            }
            self.push(&mut basis, &mut pairs, h);
        }
        Ok((self.interreduce(basis), stats))
    }

    fn push(&self, basis: &mut Basis, pairs: &mut Vec<Pair>, h: Terms) {
        basis.masks.push(divmask(&h[0].0));
        basis.polys.push(h);
        basis.active.push(true);
        let idx = basis.polys.len() - 1;
        self.update(basis, pairs, idx);
    }

    fn interreduce(&self, basis: Basis) -> Vec<Terms> {
        let mut minimal: Vec<Terms> = Vec::new();
        let polys: Vec<Terms> = basis
            .polys
            .into_iter()
            .zip(basis.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        for (k, p) in polys.iter().enumerate() {
            let lt = &p[0].0;
            let redundant = polys
                .iter()
                .enumerate()
                .any(|(o, q)| o != k && q[0].0.divides(lt) && (q[0].0 != *lt || o < k));
            if !redundant {
                minimal.push(p.clone());
            }
        }
        let masks = minimal.iter().map(|p| divmask(&p[0].0)).collect::<Vec<_>>();
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let mut active = vec![true; minimal.len()];
            active[k] = false;
            let others = Basis {
                polys: minimal.clone(),
                masks: masks.clone(),
                active,
            };
            let head = minimal[k][0].clone();
            let mut tail = self.reduce_full(minimal[k][1..].to_vec(), &others);
            tail.insert(0, head);
            reduced.push(tail);
        }
        reduced.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        reduced
    }

    /// Whether every S-polynomial of `basis` reduces to zero by `basis`.
    pub fn is_groebner(&self, basis: &[Terms]) -> bool {
        let mut polys: Vec<Terms> = basis
            .iter()
            .map(|p| self.normalize(p.clone()))
            .filter(|p| !p.is_empty())
            .collect();
        for p in polys.iter_mut() {
            self.make_monic(p);
        }
        let b = Basis {
            masks: polys.iter().map(|p| divmask(&p[0].0)).collect(),
            active: vec![true; polys.len()],
            polys,
        };
        for j in 0..b.polys.len() {
            for i in 0..j {
                let lcm = b.lead(i).lcm(b.lead(j));
                let s = self.spoly(&b.polys[i], &b.polys[j], &lcm);
                if !self.reduce_full(s, &b).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
