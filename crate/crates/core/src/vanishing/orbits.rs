//! Orbit representatives of `G` acting on subsets of `F_q^r`.
//!
//! Two points are identified when they have the same support `ε` and the
//! same character values `x^m(P)` for every `m` in a fixed basis of
//! `L_{β(ε)}`; that is exactly when they lie in one orbit of the group over
//! the algebraic closure.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FiniteField};
use crate::lattice::{IntLattice, Support};

use super::{character_value, odometer, RationalMap, ToricData};

/// Default cap on the number of points scanned during enumeration.
pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

/// A representative of an orbit, with the invariants that identify it.
#[derive(Debug, Clone)]
pub struct OrbitPoint {
    rep: Vec<FieldElement>,
    support: Support,
    fingerprint: Vec<u32>,
}

impl PartialEq for OrbitPoint {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && self.fingerprint == other.fingerprint
    }
}

impl Eq for OrbitPoint {}

impl std::hash::Hash for OrbitPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.support.hash(state);
        self.fingerprint.hash(state);
    }
}

impl OrbitPoint {
    pub fn rep(&self) -> &[FieldElement] {
        &self.rep
    }

    pub fn raw(&self) -> Vec<u32> {
        self.rep.iter().map(|e| e.raw()).collect()
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    /// `x^{m_i}(P)` over the HNF basis `{m_i}` of `L_{β(ε)}` (raw values).
    pub fn fingerprint(&self) -> &[u32] {
        &self.fingerprint
    }
}

/// Computes orbit keys, caching the lattice basis per support.
struct Fingerprinter<'a> {
    field: &'a FiniteField,
    beta: &'a [Vec<i64>],
    lattices: HashMap<Support, IntLattice>,
}

impl<'a> Fingerprinter<'a> {
    fn new(field: &'a FiniteField, beta: &'a [Vec<i64>]) -> Self {
        Fingerprinter {
            field,
            beta,
            lattices: HashMap::new(),
        }
    }

    fn key(&mut self, point: &[u32]) -> (Support, Vec<u32>) {
        let support = Support::new((0..point.len()).filter(|&i| point[i] != 0));
        if support.is_empty() {
            return (support, Vec::new());
        }
        let beta = self.beta;
        let lattice = self
            .lattices
            .entry(support.clone())
            .or_insert_with(|| IntLattice::restricted_kernel(beta, &support).expect("nonempty"));
        let fingerprint = lattice
            .basis()
            .iter()
            .map(|m| character_value(self.field, point, m, support.indices()))
            .collect();
        (support, fingerprint)
    }
}

/// Group points into orbits; each orbit is represented by its
/// lexicographically smallest member. Output is sorted by representative.
pub fn orbit_classes(
    field: &FiniteField,
    beta: &[Vec<i64>],
    points: &[Vec<u32>],
) -> Vec<OrbitPoint> {
    let mut fp = Fingerprinter::new(field, beta);
    let mut best: BTreeMap<(Support, Vec<u32>), Vec<u32>> = BTreeMap::new();
    for p in points {
        let key = fp.key(p);
        best.entry(key)
            .and_modify(|rep| {
                if p < rep {
                    *rep = p.clone();
                }
            })
            .or_insert_with(|| p.clone());
    }
    let mut out: Vec<OrbitPoint> = best
        .into_iter()
        .map(|((support, fingerprint), rep)| OrbitPoint {
            rep: rep
                .iter()
                .map(|&v| field.element(v).expect("in range"))
                .collect(),
            support,
            fingerprint,
        })
        .collect();
    out.sort_by_key(|a| a.raw());
    out
}

/// One point `1_ε` per support occurring among `points`: representatives of
/// the orbits of the big torus `T_G`, i.e. of the cells `A^r_G(ε)`.
pub fn torus_orbit_representatives(points: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut reps: Vec<Vec<u32>> = points
        .iter()
        .map(|p| p.iter().map(|&v| u32::from(v != 0)).collect())
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

/// Which points of `F_q^r` to consider.
#[derive(Debug, Clone)]
pub enum Region {
    /// All of `F_q^r`.
    Affine,
    /// `(F_q^*)^r`.
    Torus,
    /// `V(B)`.
    Irrelevant,
    /// `F_q^r ∖ V(B)`: the rational points of the toric variety.
    OutsideIrrelevant,
    /// The image of a rational map.
    Image(RationalMap),
    /// An explicit list of raw points.
    Points(Vec<Vec<u32>>),
}

/// The raw points of a region, sorted and duplicate-free.
pub fn region_points(toric: &ToricData, region: &Region, max_points: u64) -> Result<Vec<Vec<u32>>> {
    let field = toric.field();
    let r = toric.nvars();
    let scan = |values: Vec<u32>| -> Result<Vec<Vec<u32>>> {
        let count = (values.len() as u64).checked_pow(r as u32);
        if count.is_none_or(|c| c > max_points) {
            return Err(Error::BudgetExceeded(format!(
                "{}^{r} points exceed {max_points}",
                values.len()
            )));
        }
        Ok(odometer(&values, r).collect())
    };
    let all: Vec<u32> = (0..field.order()).collect();
    let mut points = match region {
        Region::Affine => scan(all)?,
        Region::Torus => scan((1..field.order()).collect())?,
        Region::Irrelevant => scan(all)?
            .into_iter()
            .filter(|p| toric.in_irrelevant_locus(p))
            .collect(),
        Region::OutsideIrrelevant => scan(all)?
            .into_iter()
            .filter(|p| !toric.in_irrelevant_locus(p))
            .collect(),
        Region::Image(map) => {
            if map.r() != r {
                return Err(Error::DimensionMismatch(format!(
                    "map has {} coordinates, ring has {r} variables",
                    map.r()
                )));
            }
            map.image(max_points)?
        }
        Region::Points(list) => {
            for p in list {
                if p.len() != r || p.iter().any(|&v| v >= field.order()) {
                    return Err(Error::DimensionMismatch(format!(
                        "point {p:?} is not in F_{}^{r}",
                        field.order()
                    )));
                }
            }
            list.clone()
        }
    };
    points.sort();
    points.dedup();
    Ok(points)
}

/// One representative per orbit of the region's points.
pub fn enumerate_orbit_points(
    toric: &ToricData,
    region: &Region,
    max_points: u64,
) -> Result<Vec<OrbitPoint>> {
    let points = region_points(toric, region, max_points)?;
    Ok(orbit_classes(toric.field(), toric.beta(), &points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn field(p: u64) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, 1).unwrap())
    }

    #[test]
    fn torus_over_f2_is_one_orbit() {
        let t = ToricData::hirzebruch(field(2), 2).unwrap();
        let orbits = enumerate_orbit_points(&t, &Region::Torus, 1000).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].raw(), [1, 1, 1, 1]);
    }

    #[test]
    fn hirzebruch_point_counts() {
        // |H_ℓ(F_q)| = (q+1)^2; V(B) has 7 cells, and the cell of support
        // {1,3} splits into q-1 orbits (x_1/x_3 is invariant)
        for (q, ell) in [(2, 1), (3, 2), (5, 3)] {
            let t = ToricData::hirzebruch(field(q), ell).unwrap();
            let x = enumerate_orbit_points(&t, &Region::OutsideIrrelevant, 10_000).unwrap();
            assert_eq!(x.len() as u64, (q + 1) * (q + 1));
            let vb = enumerate_orbit_points(&t, &Region::Irrelevant, 10_000).unwrap();
            assert_eq!(vb.len() as u64, 6 + (q - 1));
            let pts = region_points(&t, &Region::Irrelevant, 10_000).unwrap();
            assert_eq!(torus_orbit_representatives(&pts).len(), 7);
        }
    }

    #[test]
    fn projective_plane_has_q2_q_1_points() {
        for q in [2, 3, 5] {
            let t = ToricData::weighted_projective(field(q), &[1, 1, 1]).unwrap();
            let x = enumerate_orbit_points(&t, &Region::OutsideIrrelevant, 10_000).unwrap();
            assert_eq!(x.len() as u64, q * q + q + 1);
        }
    }

    /// Brute force: P ~ Q iff Q = t·P for some t ∈ G(F_q-bar); at q ≤ 3 the
    /// relevant t can be found among F_q-points once the orbit meets the
    /// torus of the support.
    #[test]
    fn fingerprint_is_constant_on_group_orbits() {
        let f = field(3);
        let t = ToricData::hirzebruch(f.clone(), 1).unwrap();
        let orbits = enumerate_orbit_points(&t, &Region::Affine, 1000).unwrap();
        let mut fp = Fingerprinter::new(&f, t.beta());
        // G(F_3) = {(a, b, a, a·b)}
        for p in odometer(&[0, 1, 2], 4) {
            let key = fp.key(&p);
            for a in 1..3 {
                for b in 1..3 {
                    let g = [a, b, a, f.mul_raw(a, b)];
                    let moved: Vec<u32> = p.iter().zip(g).map(|(&x, t)| f.mul_raw(x, t)).collect();
                    assert_eq!(fp.key(&moved), key);
                }
            }
        }
        let reps: Vec<Vec<u32>> = orbits.iter().map(|o| o.raw()).collect();
        assert!(reps.contains(&vec![0, 0, 0, 0]));
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
    }
}
