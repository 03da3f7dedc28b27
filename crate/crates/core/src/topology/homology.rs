//! Mod-2 simplicial (co)homology on Δ-complexes.

use serde::{Deserialize, Serialize};

use super::{DeltaComplex, TopologyError};

/// A mod-2 cochain: one bit per `k`-simplex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CochainMod2 {
    degree: usize,
    values: Vec<bool>,
}

impl CochainMod2 {
    pub fn new(k: &DeltaComplex, degree: usize, values: Vec<bool>) -> Result<Self, TopologyError> {
        let expected = k.simplex_count(degree);
        if values.len() != expected {
            return Err(TopologyError::WrongLength { expected, got: values.len() });
        }
        Ok(Self { degree, values })
    }

    pub fn zero(k: &DeltaComplex, degree: usize) -> Self {
        Self { degree, values: vec![false; k.simplex_count(degree)] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, s: usize) -> bool {
        self.values[s]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| !b)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Self { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(a, b)| a ^ b).collect() }
    }

    pub fn is_cocycle(&self, k: &DeltaComplex) -> bool {
        coboundary_mod2(k, self).is_zero()
    }
}

/// `(δc)(σ) = Σᵢ c(∂ᵢσ)`.
pub fn coboundary_mod2(k: &DeltaComplex, c: &CochainMod2) -> CochainMod2 {
    let d = c.degree + 1;
    let values = (0..k.simplex_count(d))
        .map(|s| {
            if d == 1 {
                let vs = k.vertices_of(1, s);
                c.values[vs[0]] ^ c.values[vs[1]]
            } else {
                k.faces_of(d, s).iter().fold(false, |acc, &f| acc ^ c.values[f])
            }
        })
        .collect();
    CochainMod2 { degree: d, values }
}

/// Alexander-Whitney cup product: front `p`-face times back `q`-face.
pub fn cup_mod2(k: &DeltaComplex, a: &CochainMod2, b: &CochainMod2) -> CochainMod2 {
    let (p, q) = (a.degree, b.degree);
    let d = p + q;
    let values = (0..k.simplex_count(d))
        .map(|s| {
            let front = if p == 0 {
                k.vertices_of(d, s)[0]
            } else {
                k.sub_simplex(d, s, &(0..=p).collect::<Vec<_>>())
            };
            let back = if q == 0 {
                k.vertices_of(d, s)[d]
            } else {
                k.sub_simplex(d, s, &(p..=d).collect::<Vec<_>>())
            };
            a.values[front] & b.values[back]
        })
        .collect();
    CochainMod2 { degree: d, values }
}

/// `⟨[X], vⁿ⟩` for a degree-1 cocycle `v` on a closed `n`-complex.
pub fn cup_power_pairing(k: &DeltaComplex, v: &CochainMod2) -> Result<bool, TopologyError> {
    if v.degree != 1 {
        return Err(TopologyError::WrongDegree { expected: 1, got: v.degree });
    }
    if v.values.len() != k.edge_count() {
        return Err(TopologyError::WrongLength { expected: k.edge_count(), got: v.values.len() });
    }
    if !v.is_cocycle(k) {
        return Err(TopologyError::NotCocycle);
    }
    let n = k.dimension();
    let mut total = false;
    for s in 0..k.simplex_count(n) {
        total ^= (0..n).all(|i| v.values[k.edge_of(n, s, i, i + 1)]);
    }
    Ok(total)
}

/// The mod-2 fundamental cycle: every top simplex with coefficient 1.
#[derive(Debug, Clone, Copy)]
pub struct FundamentalClassMod2<'a> {
    complex: &'a DeltaComplex,
}

impl<'a> FundamentalClassMod2<'a> {
    pub fn new(complex: &'a DeltaComplex) -> Self {
        Self { complex }
    }

    /// `∂[X] = 0` mod 2.
    pub fn is_cycle(&self) -> bool {
        let k = self.complex;
        let n = k.dimension();
        let mut boundary = vec![false; k.simplex_count(n - 1)];
        for s in 0..k.simplex_count(n) {
            for &f in k.faces_of(n, s) {
                boundary[f] ^= true;
            }
        }
        boundary.iter().all(|&b| !b)
    }

    pub fn pair(&self, c: &CochainMod2) -> Result<bool, TopologyError> {
        let n = self.complex.dimension();
        if c.degree != n {
            return Err(TopologyError::WrongDegree { expected: n, got: c.degree });
        }
        Ok(c.values.iter().fold(false, |a, &b| a ^ b))
    }
}

/// Row-echelon basis over `GF(2)` with a tag recording which marked inputs
/// each row came from.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<u64>, u64)>,
}

fn to_words(bits: &[bool]) -> Vec<u64> {
    let mut w = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            w[i / 64] |= 1 << (i % 64);
        }
    }
    w
}

fn lowest_bit(w: &[u64]) -> Option<usize> {
    w.iter().enumerate().find(|(_, &x)| x != 0).map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
}

impl Echelon {
    fn reduce(&self, mut v: Vec<u64>, mut tag: u64) -> (Vec<u64>, u64) {
        for (pivot, row, t) in &self.rows {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
                tag ^= t;
            }
        }
        (v, tag)
    }

    /// Returns true when `v` was independent of the current rows.
    fn insert(&mut self, v: Vec<u64>, tag: u64) -> bool {
        let (v, tag) = self.reduce(v, tag);
        match lowest_bit(&v) {
            Some(p) => {
                // Keep rows fully reduced at the new pivot.
                for (_, row, t) in self.rows.iter_mut() {
                    if row[p / 64] >> (p % 64) & 1 == 1 {
                        for (a, b) in row.iter_mut().zip(&v) {
                            *a ^= b;
                        }
                        *t ^= tag;
                    }
                }
                self.rows.push((p, v, tag));
                true
            }
            None => false,
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Boundary rank of `∂_d : C_d → C_{d-1}`.
fn boundary_rank(k: &DeltaComplex, d: usize) -> usize {
    if d == 0 || d > k.dimension() {
        return 0;
    }
    let mut e = Echelon::default();
    for s in 0..k.simplex_count(d) {
        let mut col = vec![false; k.simplex_count(d - 1)];
        if d == 1 {
            for &v in k.vertices_of(1, s) {
                col[v] ^= true;
            }
        } else {
            for &f in k.faces_of(d, s) {
                col[f] ^= true;
            }
        }
        e.insert(to_words(&col), 0);
    }
    e.rank()
}

pub fn betti_mod2(k: &DeltaComplex) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=k.dimension() + 1).map(|d| boundary_rank(k, d)).collect();
    (0..=k.dimension()).map(|d| k.simplex_count(d) - ranks[d] - ranks[d + 1]).collect()
}

/// Mod-2 Betti numbers and a basis of `H¹` by cocycle representatives.
#[derive(Debug, Clone)]
pub struct CohomologyMod2 {
    betti: Vec<usize>,
    h1_basis: Vec<CochainMod2>,
    echelon: Echelon,
}

impl CohomologyMod2 {
    pub fn compute(k: &DeltaComplex) -> Self {
        let betti = betti_mod2(k);
        let edges = k.edge_count();
        let mut echelon = Echelon::default();
        for v in 0..k.vertex_count() {
            let mut c = vec![false; k.vertex_count()];
            c[v] = true;
            let d = coboundary_mod2(k, &CochainMod2 { degree: 0, values: c });
            echelon.insert(to_words(&d.values), 0);
        }
        let mut h1_basis = Vec::new();
        for z in cocycle_space(k) {
            let tag = 1u64 << h1_basis.len().min(63);
            if echelon.insert(to_words(&z), tag) {
                h1_basis.push(CochainMod2 { degree: 1, values: z });
            }
        }
        assert_eq!(h1_basis.len(), betti[1], "H¹ basis disagrees with Betti number");
        assert!(h1_basis.len() <= 63, "first Betti number too large");
        debug_assert!(h1_basis.iter().all(|b| b.values.len() == edges));
        Self { betti, h1_basis, echelon }
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn h1_basis(&self) -> &[CochainMod2] {
        &self.h1_basis
    }

    /// Coordinates of a 1-cocycle in the `H¹` basis.
    pub fn coordinates(&self, k: &DeltaComplex, v: &CochainMod2) -> Result<Vec<bool>, TopologyError> {
        if v.degree != 1 {
            return Err(TopologyError::WrongDegree { expected: 1, got: v.degree });
        }
        if !v.is_cocycle(k) {
            return Err(TopologyError::NotCocycle);
        }
        let (rest, tag) = self.echelon.reduce(to_words(&v.values), 0);
        debug_assert!(lowest_bit(&rest).is_none());
        Ok((0..self.h1_basis.len()).map(|i| tag >> i & 1 == 1).collect())
    }

    /// Cocycle `Σ cᵢ vᵢ`.
    pub fn combination(&self, k: &DeltaComplex, coords: &[bool]) -> CochainMod2 {
        let mut acc = CochainMod2::zero(k, 1);
        for (c, b) in coords.iter().zip(&self.h1_basis) {
            if *c {
                acc = acc.add(b);
            }
        }
        acc
    }

    /// Every class once, in binary order of coordinates.
    pub fn all_classes(&self, k: &DeltaComplex) -> Vec<CochainMod2> {
        let b = self.h1_basis.len();
        (0u64..1 << b)
            .map(|m| self.combination(k, &(0..b).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()))
            .collect()
    }
}

/// Basis of `ker(δ : C¹ → C²)`.
fn cocycle_space(k: &DeltaComplex) -> Vec<Vec<bool>> {
    let edges = k.edge_count();
    let tris = k.simplex_count(2);
    // Rows of δ¹: one per triangle, bits over edges.
    let rows: Vec<Vec<bool>> = (0..tris)
        .map(|t| {
            let mut r = vec![false; edges];
            for &f in k.faces_of(2, t) {
                r[f] ^= true;
            }
            r
        })
        .collect();
    nullspace(rows, edges)
}

fn nullspace(mut rows: Vec<Vec<bool>>, cols: usize) -> Vec<Vec<bool>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot_row = rows[r].clone();
                for (a, b) in rows[i].iter_mut().zip(pivot_row) {
                    *a ^= b;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![false; cols];
            v[free] = true;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = rows[i][free];
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spectrum {
    #[serde(rename = "HZ")]
    IntegralHomology,
    #[serde(rename = "HZ/2")]
    Mod2Homology,
}

/// The object condition `E_n(Y) = 0` for an `(n-1)`-dimensional `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectCondition {
    pub spectrum: Spectrum,
    pub degree: usize,
    pub satisfied: bool,
    pub reason: String,
}

pub fn object_condition(y: &DeltaComplex, spectrum: Spectrum) -> ObjectCondition {
    let degree = y.dimension() + 1;
    ObjectCondition {
        spectrum,
        degree,
        satisfied: true,
        reason: format!("ordinary homology of a {}-dimensional complex vanishes in degree {degree}", y.dimension()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> DeltaComplex {
        DeltaComplex::from_polygon_word("abAB").unwrap()
    }

    #[test]
    fn nullspace_of_small_matrix() {
        let ns = nullspace(vec![vec![true, true, false], vec![false, true, true]], 3);
        assert_eq!(ns, vec![vec![true, true, true]]);
    }

    #[test]
    fn torus_cohomology() {
        let k = torus();
        let h = CohomologyMod2::compute(&k);
        assert_eq!(h.betti(), &[1, 2, 1]);
        for c in h.all_classes(&k) {
            assert!(c.is_cocycle(&k));
            assert!(!cup_power_pairing(&k, &c).unwrap());
        }
    }

    #[test]
    fn coordinates_recover_combinations() {
        let k = DeltaComplex::torus_cube(3).unwrap();
        let h = CohomologyMod2::compute(&k);
        assert_eq!(h.betti(), &[1, 3, 3, 1]);
        for m in 0u8..8 {
            let coords: Vec<bool> = (0..3).map(|i| m >> i & 1 == 1).collect();
            let c = h.combination(&k, &coords);
            assert_eq!(h.coordinates(&k, &c).unwrap(), coords);
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let k = torus();
        let mut v = CochainMod2::zero(&k, 1);
        v.values[0] = true;
        v.values[1] = false;
        v.values[2] = false;
        assert_eq!(cup_power_pairing(&k, &v), Err(TopologyError::NotCocycle));
    }

    #[test]
    fn fundamental_class_is_a_cycle() {
        let k = torus();
        let f = FundamentalClassMod2::new(&k);
        assert!(f.is_cycle());
        let top = CochainMod2 { degree: 2, values: vec![true, false] };
        assert!(f.pair(&top).unwrap());
    }

    #[test]
    fn object_condition_holds() {
        let r = object_condition(&torus(), Spectrum::Mod2Homology);
        assert!(r.satisfied);
        assert_eq!(r.degree, 3);
    }
}
