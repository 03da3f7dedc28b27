//! Bar-resolution cochains `Γⁿ → Z/N` with trivial action, and enumeration
//! of cohomology classes.
//!
//! Values are stored additively in `Z/N`; the coefficient group is read as
//! `μ_N ⊂ U(1)` through `k ↦ ζ_N^k`. Tables are flat, indexed by argument
//! tuples in lexicographic order (first argument most significant).

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use super::zmod::{prime_powers, Homology, Mat, PrimePower};
use super::FiniteGroup;

/// Exhaustive enumeration is allowed while `|Γ|^n · log₂N` stays within this.
pub const EXHAUSTIVE_BUDGET_BITS: f64 = 24.0;
/// Cap on brute-force coboundary enumeration.
const COBOUNDARY_ENUMERATION_LIMIT: u64 = 1 << 24;
/// Cap on dense coboundary-matrix entries in linear-system mode.
const MATRIX_ENTRY_LIMIT: usize = 40_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CocycleError {
    #[error("cochain table has {got} values, expected {expected} for degree {degree} on a group of order {order}")]
    BadLength { degree: usize, order: usize, expected: usize, got: usize },
    #[error("value {value} is not reduced modulo {modulus}")]
    ValueOutOfRange { value: u32, modulus: u32 },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error(
        "cochain is not normalized: it is nonzero at {first:?} ({count} offending tuples); \
         cocycles must vanish whenever an argument is the identity. Every class has such a \
         representative: subtract the coboundary of a suitable lower-degree cochain"
    )]
    NotNormalized { first: Vec<usize>, count: usize },
    #[error("cocycle condition fails at {0:?}")]
    NotCocycle(Vec<usize>),
    #[error("degree {0} is outside the supported range 1..=3")]
    UnsupportedDegree(usize),
    #[error("degree or modulus mismatch between cochains")]
    Mismatch,
    #[error(
        "exhaustive enumeration needs |Γ|^n·log2(N) = {bits:.1} bits, over the budget of \
         {EXHAUSTIVE_BUDGET_BITS}; use the linear-system mode instead"
    )]
    ExhaustiveBudget { bits: f64 },
    #[error("enumeration of {0} cochains exceeds the brute-force limit")]
    EnumerationBudget(u64),
    #[error("coboundary matrix with {0} entries exceeds the dense linear-algebra limit")]
    MatrixBudget(usize),
}

/// A cochain `Γᵏ → Z/N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    order: usize,
    degree: usize,
    modulus: u32,
    values: Vec<u32>,
}

impl Cochain {
    pub fn new(group: &FiniteGroup, degree: usize, modulus: u32, values: Vec<u32>) -> Result<Self, CocycleError> {
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        let expected = group.order().pow(degree as u32);
        if values.len() != expected {
            return Err(CocycleError::BadLength { degree, order: group.order(), expected, got: values.len() });
        }
        if let Some(&value) = values.iter().find(|&&v| v >= modulus) {
            return Err(CocycleError::ValueOutOfRange { value, modulus });
        }
        Ok(Self { order: group.order(), degree, modulus, values })
    }

    pub fn zero(group: &FiniteGroup, degree: usize, modulus: u32) -> Self {
        Self { order: group.order(), degree, modulus, values: vec![0; group.order().pow(degree as u32)] }
    }

    /// Tabulates `f` over all argument tuples; values are reduced mod `N`.
    pub fn from_fn(group: &FiniteGroup, degree: usize, modulus: u32, mut f: impl FnMut(&[usize]) -> i64) -> Self {
        let order = group.order();
        let values = tuples(order, degree).map(|t| f(&t).rem_euclid(modulus as i64) as u32).collect();
        Self { order, degree, modulus, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, args: &[usize]) -> u32 {
        debug_assert_eq!(args.len(), self.degree);
        self.values[index_of(self.order, args)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Pointwise sum, i.e. the product in multiplicative notation.
    pub fn multiply(&self, other: &Self) -> Result<Self, CocycleError> {
        if self.degree != other.degree || self.modulus != other.modulus || self.order != other.order {
            return Err(CocycleError::Mismatch);
        }
        let n = self.modulus as u64;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| ((a as u64 + b as u64) % n) as u32)
            .collect();
        Ok(Self { values, ..self.clone() })
    }

    pub fn is_normalized(&self) -> bool {
        normalization_report(self).violations.is_empty()
    }
}

fn index_of(order: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &g| acc * order + g)
}

/// All tuples in `{0..order}^degree`, lexicographic.
fn tuples(order: usize, degree: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = order.pow(degree as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; degree];
        for slot in t.iter_mut().rev() {
            *slot = idx % order;
            idx /= order;
        }
        t
    })
}

/// Tuples with every entry a non-identity element, lexicographic.
fn normalized_tuples(order: usize, degree: usize) -> Vec<Vec<usize>> {
    if order == 1 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    tuples(order - 1, degree).map(|t| t.into_iter().map(|x| x + 1).collect()).collect()
}

/// Terms of the bar differential on a tuple of length `k + 1`: each is a
/// sign and the length-`k` tuple it evaluates.
fn bar_faces(group: &FiniteGroup, t: &[usize]) -> Vec<(i64, Vec<usize>)> {
    let k = t.len() - 1;
    let mut out = Vec::with_capacity(k + 2);
    out.push((1, t[1..].to_vec()));
    for i in 1..=k {
        let mut face = Vec::with_capacity(k);
        face.extend_from_slice(&t[..i - 1]);
        face.push(group.mul(t[i - 1], t[i]));
        face.extend_from_slice(&t[i + 1..]);
        out.push((if i % 2 == 1 { -1 } else { 1 }, face));
    }
    out.push((if (k + 1) % 2 == 1 { -1 } else { 1 }, t[..k].to_vec()));
    out
}

/// `δη` for trivial coefficients:
/// `(δη)(g₁…g_{k+1}) = η(g₂…) + Σ (−1)^i η(…g_i g_{i+1}…) + (−1)^{k+1} η(g₁…g_k)`.
pub fn coboundary(group: &FiniteGroup, eta: &Cochain) -> Cochain {
    let n = eta.modulus as i64;
    Cochain::from_fn(group, eta.degree + 1, eta.modulus, |t| {
        bar_faces(group, t).iter().map(|(s, f)| s * eta.get(f) as i64).sum::<i64>() % n
    })
}

fn first_cocycle_failure(group: &FiniteGroup, c: &Cochain) -> Option<Vec<usize>> {
    let d = coboundary(group, c);
    tuples(group.order(), c.degree + 1).zip(d.values).find(|(_, v)| *v != 0).map(|(t, _)| t)
}

/// Where a cochain fails to vanish on tuples containing the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationReport {
    pub violations: Vec<Vec<usize>>,
}

pub fn normalization_report(c: &Cochain) -> NormalizationReport {
    let violations = tuples(c.order, c.degree)
        .zip(&c.values)
        .filter(|(t, &v)| v != 0 && t.contains(&0))
        .map(|(t, _)| t)
        .collect();
    NormalizationReport { violations }
}

/// Verifies `δω = 0`. Non-normalized input is reported as an error rather
/// than being shifted to a normalized representative.
pub fn check_cocycle(group: &FiniteGroup, c: &Cochain) -> Result<bool, CocycleError> {
    let report = normalization_report(c);
    if let Some(first) = report.violations.first() {
        return Err(CocycleError::NotNormalized { first: first.clone(), count: report.violations.len() });
    }
    Ok(first_cocycle_failure(group, c).is_none())
}

/// A normalized cocycle `ω ∈ Zⁿ(Γ; Z/N)`, `1 ≤ n ≤ 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCocycle {
    group: FiniteGroup,
    cochain: Cochain,
}

impl GroupCocycle {
    pub fn new(group: &FiniteGroup, cochain: Cochain) -> Result<Self, CocycleError> {
        if !(1..=3).contains(&cochain.degree) {
            return Err(CocycleError::UnsupportedDegree(cochain.degree));
        }
        if cochain.order != group.order() {
            return Err(CocycleError::Mismatch);
        }
        if !check_cocycle(group, &cochain)? {
            return Err(CocycleError::NotCocycle(first_cocycle_failure(group, &cochain).unwrap()));
        }
        Ok(Self { group: group.clone(), cochain })
    }

    pub fn from_values(group: &FiniteGroup, degree: usize, modulus: u32, values: Vec<u32>) -> Result<Self, CocycleError> {
        Self::new(group, Cochain::new(group, degree, modulus, values)?)
    }

    pub fn from_fn(
        group: &FiniteGroup,
        degree: usize,
        modulus: u32,
        f: impl FnMut(&[usize]) -> i64,
    ) -> Result<Self, CocycleError> {
        Self::new(group, Cochain::from_fn(group, degree, modulus, f))
    }

    pub fn trivial(group: &FiniteGroup, degree: usize, modulus: u32) -> Result<Self, CocycleError> {
        Self::new(group, Cochain::zero(group, degree, modulus))
    }

    /// `w₁ⁿ` on `Z/2`: `ω(g₁,…,g_n) = g₁⋯g_n` with values in `Z/2`.
    pub fn w1_power(degree: usize) -> Result<Self, CocycleError> {
        let z2 = FiniteGroup::cyclic(2).expect("Z/2");
        Self::from_fn(&z2, degree, 2, |t| t.iter().product::<usize>() as i64)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.cochain.degree
    }

    pub fn modulus(&self) -> u32 {
        self.cochain.modulus
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn get(&self, args: &[usize]) -> u32 {
        self.cochain.get(args)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, CocycleError> {
        if self.group != other.group {
            return Err(CocycleError::Mismatch);
        }
        Ok(Self { group: self.group.clone(), cochain: self.cochain.multiply(&other.cochain)? })
    }

    /// `ω · δη` for a normalized `(n−1)`-cochain `η`.
    pub fn shifted_by(&self, eta: &Cochain) -> Result<Self, CocycleError> {
        if eta.degree + 1 != self.degree() || eta.modulus != self.modulus() || eta.order != self.group.order() {
            return Err(CocycleError::Mismatch);
        }
        let report = normalization_report(eta);
        if let Some(first) = report.violations.first() {
            return Err(CocycleError::NotNormalized { first: first.clone(), count: report.violations.len() });
        }
        let d = coboundary(&self.group, eta);
        Ok(Self { group: self.group.clone(), cochain: self.cochain.multiply(&d)? })
    }

    /// Whether `ω` becomes a coboundary once `μ_N` is viewed inside `U(1)`.
    pub fn is_trivial_in_u1(&self) -> Result<bool, CocycleError> {
        let ctx = U1Classes::new(&self.group, self.degree(), self.modulus())?;
        Ok(ctx.class_of(&self.cochain).iter().all(|&c| c == 0))
    }
}

/// Decides `ω = δη` over `Z/N` by enumerating every normalized `(n−1)`-cochain.
pub fn is_coboundary_exhaustive(group: &FiniteGroup, omega: &Cochain) -> Result<bool, CocycleError> {
    if omega.degree == 0 {
        return Ok(omega.is_zero());
    }
    let n = omega.modulus;
    for eta in all_normalized_cochains(group, omega.degree - 1, n)? {
        if coboundary(group, &eta) == *omega {
            return Ok(true);
        }
    }
    Ok(false)
}

fn all_normalized_cochains(
    group: &FiniteGroup,
    degree: usize,
    modulus: u32,
) -> Result<impl Iterator<Item = Cochain> + '_, CocycleError> {
    let slots = normalized_tuples(group.order(), degree);
    let count = (modulus as u64).checked_pow(slots.len() as u32).unwrap_or(u64::MAX);
    if count > COBOUNDARY_ENUMERATION_LIMIT {
        return Err(CocycleError::EnumerationBudget(count));
    }
    let order = group.order();
    Ok((0..count).map(move |mut code| {
        let mut values = vec![0u32; order.pow(degree as u32)];
        for t in &slots {
            values[index_of(order, t)] = (code % modulus as u64) as u32;
            code /= modulus as u64;
        }
        Cochain { order, degree, modulus, values }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMode {
    /// Enumerate every normalized cochain; only within the exhaustive budget.
    Exhaustive,
    /// Solve `δω = 0` and quotient by coboundaries with Smith normal form.
    LinearSystem,
    /// Exhaustive when within budget, otherwise linear-system.
    Auto,
}

/// One normalized representative per cohomology class, trivial class first.
///
/// Classes are those of the image of `Hⁿ(Γ; Z/N) → Hⁿ(Γ; U(1))` under
/// `Z/N ≅ μ_N ⊂ U(1)`: two `Z/N` cocycles are identified when their ratio is
/// a `U(1)`-valued coboundary, which is the equivalence that leaves every
/// partition function unchanged.
#[derive(Debug, Clone)]
pub struct CohomologyClasses {
    pub degree: usize,
    pub modulus: u32,
    pub mode: ClassMode,
    pub representatives: Vec<GroupCocycle>,
}

impl CohomologyClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub fn enumerate_classes_small(
    group: &FiniteGroup,
    degree: usize,
    modulus: u32,
    mode: ClassMode,
) -> Result<CohomologyClasses, CocycleError> {
    if !(1..=3).contains(&degree) {
        return Err(CocycleError::UnsupportedDegree(degree));
    }
    if modulus == 0 {
        return Err(CocycleError::ZeroModulus);
    }
    let bits = (group.order() as f64).powi(degree as i32) * (modulus as f64).log2();
    let mode = match mode {
        ClassMode::Auto if bits <= EXHAUSTIVE_BUDGET_BITS => ClassMode::Exhaustive,
        ClassMode::Auto => ClassMode::LinearSystem,
        ClassMode::Exhaustive if bits > EXHAUSTIVE_BUDGET_BITS => {
            return Err(CocycleError::ExhaustiveBudget { bits })
        }
        m => m,
    };
    let representatives = match mode {
        ClassMode::Exhaustive => exhaustive_classes(group, degree, modulus)?,
        _ => U1Classes::new(group, degree, modulus)?.representatives()?,
    };
    Ok(CohomologyClasses { degree, modulus, mode, representatives })
}

fn exhaustive_classes(group: &FiniteGroup, degree: usize, modulus: u32) -> Result<Vec<GroupCocycle>, CocycleError> {
    let big = modulus * group.order() as u32;
    let lift = group.order() as u32;
    let boundaries: HashSet<Vec<u32>> = all_normalized_cochains(group, degree - 1, big)?
        .map(|eta| coboundary(group, &eta).values)
        .collect();
    let mut reps: Vec<Cochain> = Vec::new();
    for c in all_normalized_cochains(group, degree, modulus)? {
        if first_cocycle_failure(group, &c).is_some() {
            continue;
        }
        let equivalent = reps.iter().any(|r| {
            let diff: Vec<u32> = c
                .values
                .iter()
                .zip(&r.values)
                .map(|(&a, &b)| ((a + modulus - b) % modulus) * lift % big)
                .collect();
            boundaries.contains(&diff)
        });
        if !equivalent {
            reps.push(c);
        }
    }
    reps.into_iter().map(|c| GroupCocycle::new(group, c)).collect()
}

/// Integer matrix of `δ: C^k_norm → C^{k+1}_norm`.
fn coboundary_matrix(group: &FiniteGroup, k: usize) -> Result<(Mat, usize, usize), CocycleError> {
    let rows = normalized_tuples(group.order(), k + 1);
    let cols = normalized_tuples(group.order(), k);
    let entries = rows.len().saturating_mul(cols.len());
    if entries > MATRIX_ENTRY_LIMIT {
        return Err(CocycleError::MatrixBudget(entries));
    }
    let col_index: HashMap<&Vec<usize>, usize> = cols.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (r, t) in rows.iter().enumerate() {
        for (s, face) in bar_faces(group, t) {
            if let Some(&c) = col_index.get(&face) {
                m[r][c] += s;
            }
        }
    }
    // Stored as signed; callers reduce per modulus.
    let m = m.into_iter().map(|row| row.into_iter().map(|x| x as u64).collect()).collect();
    Ok((m, rows.len(), cols.len()))
}

fn reduce_signed(m: &Mat, q: u64) -> Mat {
    m.iter().map(|row| row.iter().map(|&x| (x as i64).rem_euclid(q as i64) as u64).collect()).collect()
}

/// Linear-system machinery for `Hⁿ(Γ; Z/N)` and its image in `U(1)` cohomology.
struct U1Classes<'g> {
    group: &'g FiniteGroup,
    degree: usize,
    modulus: u32,
    slots: Vec<Vec<usize>>,
    /// Homology over each prime power dividing `N`.
    small: Vec<(PrimePower, Homology)>,
    /// Homology over each prime power dividing `N·|Γ|`.
    big: Vec<(PrimePower, Homology)>,
}

impl<'g> U1Classes<'g> {
    fn new(group: &'g FiniteGroup, degree: usize, modulus: u32) -> Result<Self, CocycleError> {
        let (a, _, a_cols) = coboundary_matrix(group, degree - 1)?;
        let (b, b_rows, k) = coboundary_matrix(group, degree)?;
        let build = |n: u64| {
            prime_powers(n)
                .into_iter()
                .map(|pp| {
                    let h = Homology::new(pp, &reduce_signed(&a, pp.q), a_cols, &reduce_signed(&b, pp.q), b_rows, k);
                    (pp, h)
                })
                .collect::<Vec<_>>()
        };
        Ok(Self {
            group,
            degree,
            modulus,
            slots: normalized_tuples(group.order(), degree),
            small: build(modulus as u64),
            big: build(modulus as u64 * group.order() as u64),
        })
    }

    fn coords(&self, c: &Cochain) -> Vec<u64> {
        self.slots.iter().map(|t| c.get(t) as u64).collect()
    }

    /// Class in `Hⁿ(Γ; Z/(N·|Γ|))` of `|Γ|·ω`, which is zero exactly when
    /// `ω` is trivial in `U(1)` cohomology.
    fn class_of(&self, c: &Cochain) -> Vec<u64> {
        let big_mod = self.modulus as u64 * self.group.order() as u64;
        let lifted: Vec<u64> = self.coords(c).iter().map(|&x| x * self.group.order() as u64 % big_mod).collect();
        self.big
            .iter()
            .flat_map(|(pp, h)| h.class_of(&lifted.iter().map(|&x| x % pp.q).collect::<Vec<_>>()))
            .collect()
    }

    fn cocycle_generators(&self) -> Vec<Vec<u64>> {
        let n = self.modulus as u64;
        let mut gens = Vec::new();
        for (pp, h) in &self.small {
            let cofactor = n / pp.q;
            let crt = cofactor * pp.unit_inverse(cofactor % pp.q) % n;
            for g in h.cocycle_generators() {
                gens.push(g.iter().map(|&x| (x as u128 * crt as u128 % n as u128) as u64).collect());
            }
        }
        gens
    }

    fn to_cochain(&self, coords: &[u64]) -> Cochain {
        let order = self.group.order();
        let mut values = vec![0u32; order.pow(self.degree as u32)];
        for (t, &x) in self.slots.iter().zip(coords) {
            values[index_of(order, t)] = x as u32;
        }
        Cochain { order, degree: self.degree, modulus: self.modulus, values }
    }

    fn representatives(&self) -> Result<Vec<GroupCocycle>, CocycleError> {
        let n = self.modulus as u64;
        let gens: Vec<(Vec<u64>, Vec<u64>)> = self
            .cocycle_generators()
            .into_iter()
            .map(|g| {
                let class = self.class_of(&self.to_cochain(&g));
                (g, class)
            })
            .collect();
        let orders: Vec<u64> = self.big.iter().flat_map(|(_, h)| h.orders.clone()).collect();
        let zero_class = vec![0u64; orders.len()];
        let mut seen: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
        let mut order_found = vec![zero_class.clone()];
        seen.insert(zero_class.clone(), vec![0; self.slots.len()]);
        let mut queue = VecDeque::from([zero_class]);
        while let Some(cls) = queue.pop_front() {
            let rep = seen[&cls].clone();
            for (g, gc) in &gens {
                let next: Vec<u64> = cls.iter().zip(gc).zip(&orders).map(|((a, b), o)| (a + b) % o).collect();
                if !seen.contains_key(&next) {
                    let r: Vec<u64> = rep.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
                    seen.insert(next.clone(), r);
                    order_found.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        order_found
            .iter()
            .map(|cls| GroupCocycle::new(self.group, self.to_cochain(&seen[cls])))
            .collect()
    }
}

/// `|Hⁿ(Γ; Z/N)|` with no identification through `U(1)`.
pub fn raw_cohomology_order(group: &FiniteGroup, degree: usize, modulus: u32) -> Result<u64, CocycleError> {
    if !(1..=3).contains(&degree) {
        return Err(CocycleError::UnsupportedDegree(degree));
    }
    let ctx = U1Classes::new(group, degree, modulus)?;
    Ok(ctx.small.iter().map(|(_, h)| h.size()).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn klein() -> FiniteGroup {
        FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap()
    }

    /// `ω((a,b),(c,d)) = a·d` on `Z/2 × Z/2`; element `(a,b)` has index `2a + b`.
    fn ad_cocycle(v: &FiniteGroup) -> Cochain {
        Cochain::from_fn(v, 2, 2, |t| ((t[0] / 2) * (t[1] % 2)) as i64)
    }

    fn random_normalized(group: &FiniteGroup, degree: usize, modulus: u32, rng: &mut ChaCha8Rng) -> Cochain {
        Cochain::from_fn(group, degree, modulus, |t| {
            if t.contains(&0) { 0 } else { rng.gen_range(0..modulus as i64) }
        })
    }

    fn test_matrix() -> Vec<(FiniteGroup, u32)> {
        vec![
            (FiniteGroup::cyclic(2).unwrap(), 2),
            (FiniteGroup::cyclic(3).unwrap(), 3),
            (FiniteGroup::cyclic(4).unwrap(), 4),
            (klein(), 2),
            (FiniteGroup::symmetric(3).unwrap(), 6),
        ]
    }

    #[test]
    fn d_squared_vanishes_on_random_cochains() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (g, n) in test_matrix() {
            for degree in 0..=2 {
                for _ in 0..100 {
                    let eta = Cochain::from_fn(&g, degree, n, |_| rng.gen_range(0..n as i64));
                    assert!(coboundary(&g, &coboundary(&g, &eta)).is_zero());
                }
            }
        }
    }

    #[test]
    fn check_cocycle_examples() {
        let v = klein();
        assert!(check_cocycle(&v, &Cochain::zero(&v, 2, 2)).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let eta = random_normalized(&v, 1, 2, &mut rng);
        assert!(check_cocycle(&v, &coboundary(&v, &eta)).unwrap());

        let ad = ad_cocycle(&v);
        assert!(check_cocycle(&v, &ad).unwrap());
        assert!(!is_coboundary_exhaustive(&v, &ad).unwrap());
        let ad = GroupCocycle::new(&v, ad).unwrap();
        assert!(!ad.is_trivial_in_u1().unwrap());
    }

    #[test]
    fn non_normalized_input_is_rejected_not_fixed() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        // A constant 2-cochain is a cocycle but not normalized.
        let c = Cochain::from_fn(&z2, 2, 2, |_| 1);
        match check_cocycle(&z2, &c) {
            Err(CocycleError::NotNormalized { first, count }) => {
                assert_eq!(first, vec![0, 0]);
                assert_eq!(count, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(GroupCocycle::new(&z2, c).is_err());
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let c = Cochain::from_fn(&z3, 2, 3, |t| if t == [1, 1] { 1 } else { 0 });
        assert!(matches!(GroupCocycle::new(&z3, c), Err(CocycleError::NotCocycle(_))));
    }

    #[test]
    fn class_counts() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v = klein();
        let trivial = FiniteGroup::cyclic(1).unwrap();
        for mode in [ClassMode::Exhaustive, ClassMode::LinearSystem] {
            assert_eq!(enumerate_classes_small(&z2, 2, 2, mode).unwrap().len(), 1);
            assert_eq!(enumerate_classes_small(&v, 2, 2, mode).unwrap().len(), 2);
            for n in 1..=3 {
                assert_eq!(enumerate_classes_small(&trivial, n, 5, mode).unwrap().len(), 1);
            }
            // H³(Z/2; U(1)) = Z/2 and its generator takes values in μ₂.
            assert_eq!(enumerate_classes_small(&z2, 3, 2, mode).unwrap().len(), 2);
            // H³(Z/3; U(1)) = Z/3.
            assert_eq!(enumerate_classes_small(&FiniteGroup::cyclic(3).unwrap(), 2, 3, mode).unwrap().len(), 1);
        }
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(enumerate_classes_small(&z3, 3, 3, ClassMode::LinearSystem).unwrap().len(), 3);
        // H²(Z/2×Z/2; U(1)) = Z/2 is already visible with μ₄ coefficients.
        assert_eq!(enumerate_classes_small(&v, 2, 4, ClassMode::LinearSystem).unwrap().len(), 2);
        // H³(S₃; U(1)) = Z/6.
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(enumerate_classes_small(&s3, 3, 6, ClassMode::LinearSystem).unwrap().len(), 6);
    }

    #[test]
    fn raw_counts_differ_from_u1_counts() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(raw_cohomology_order(&z2, 2, 2).unwrap(), 2);
        assert_eq!(raw_cohomology_order(&klein(), 2, 2).unwrap(), 8);
        assert_eq!(raw_cohomology_order(&FiniteGroup::cyclic(4).unwrap(), 1, 4).unwrap(), 4);
    }

    #[test]
    fn zero_class_first_and_representatives_distinct() {
        let v = klein();
        for mode in [ClassMode::Exhaustive, ClassMode::LinearSystem] {
            let classes = enumerate_classes_small(&v, 2, 2, mode).unwrap();
            assert!(classes.representatives[0].cochain().is_zero());
            assert!(!classes.representatives[1].is_trivial_in_u1().unwrap());
        }
    }

    #[test]
    fn exhaustive_and_linear_modes_agree() {
        let mut cases = Vec::new();
        for (g, n) in test_matrix() {
            for degree in 1..=3 {
                for modulus in [2, 3, 4, n] {
                    let bits = (g.order() as f64).powi(degree as i32) * (modulus as f64).log2();
                    if bits <= EXHAUSTIVE_BUDGET_BITS {
                        cases.push((g.clone(), degree, modulus));
                    }
                }
            }
        }
        assert!(cases.len() >= 8);
        for (g, degree, modulus) in cases {
            let ex = enumerate_classes_small(&g, degree, modulus, ClassMode::Exhaustive);
            let Ok(ex) = ex else { continue };
            let lin = enumerate_classes_small(&g, degree, modulus, ClassMode::LinearSystem).unwrap();
            assert_eq!(ex.len(), lin.len(), "order {} degree {degree} modulus {modulus}", g.order());
        }
    }

    #[test]
    fn exhaustive_budget_is_enforced() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let err = enumerate_classes_small(&s3, 2, 2, ClassMode::Exhaustive).unwrap_err();
        assert!(matches!(err, CocycleError::ExhaustiveBudget { .. }));
        assert!(err.to_string().contains("linear-system"));
        assert_eq!(enumerate_classes_small(&s3, 2, 2, ClassMode::Auto).unwrap().mode, ClassMode::LinearSystem);
    }

    #[test]
    fn shifted_cocycle_stays_a_cocycle() {
        let v = klein();
        let omega = GroupCocycle::new(&v, ad_cocycle(&v)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let eta = random_normalized(&v, 1, 2, &mut rng);
            let shifted = omega.shifted_by(&eta).unwrap();
            assert!(check_cocycle(&v, shifted.cochain()).unwrap());
        }
        let zero = Cochain::zero(&v, 1, 2);
        assert_eq!(omega.shifted_by(&zero).unwrap(), omega);
    }

    #[test]
    fn w1_power_is_a_cocycle() {
        for n in 1..=3 {
            let w = GroupCocycle::w1_power(n).unwrap();
            assert_eq!(w.get(&vec![1; n]), 1);
        }
    }
}
