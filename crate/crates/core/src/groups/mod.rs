//! Finite groups given by multiplication tables, plus group cohomology with
//! cyclic coefficients.
//!
//! Elements are indices `0..order`; index `0` is always the identity.

mod cocycle;
mod zmod;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{CyclotomicScalar, ScalarError};

pub use cocycle::{
    check_cocycle, coboundary, enumerate_classes_small, is_coboundary_exhaustive, normalization_report,
    raw_cohomology_order, ClassMode, Cochain, CocycleError, CohomologyClasses, GroupCocycle,
    NormalizationReport,
};

/// Largest group order accepted by the builders.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order {0} exceeds the limit of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("empty group table")]
    Empty,
    #[error("table row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({row}, {col}) is not an element index")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("element 0 is not a two-sided identity (fails at element {0})")]
    IdentityFails(usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("symmetric group S_{0} is not supported (k must be at most 4)")]
    SymmetricTooLarge(usize),
    #[error("cyclic group of order 0")]
    ZeroOrder,
}

/// Declarative group literal, as used in manifests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Product(Vec<GroupSpec>),
    Table(Vec<Vec<usize>>),
}

/// A finite group as a validated multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates an explicit table. `table[a][b]` is the index of `a·b`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let names = (0..table.len()).map(|i| format!("g{i}")).collect();
        Self::from_table_named(table, names)
    }

    fn from_table_named(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= order) {
                return Err(GroupError::EntryOutOfRange { row, col, value });
            }
        }
        for a in 0..order {
            if table[0][a] != a || table[a][0] != a {
                return Err(GroupError::IdentityFails(a));
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(GroupError::NoInverse(a)),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Self { order, table: table.concat(), inverse, names })
    }

    pub fn build(spec: &GroupSpec) -> Result<Self, GroupError> {
        match spec {
            GroupSpec::Cyclic(m) => Self::cyclic(*m),
            GroupSpec::Symmetric(k) => Self::symmetric(*k),
            GroupSpec::Product(factors) => {
                let mut acc = Self::cyclic(1)?;
                for f in factors {
                    acc = acc.product(&Self::build(f)?)?;
                }
                Ok(acc)
            }
            GroupSpec::Table(t) => Self::from_table(t.clone()),
        }
    }

    pub fn cyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if m > MAX_ORDER {
            return Err(GroupError::TooLarge(m));
        }
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Self::from_table_named(table, (0..m).map(|k| k.to_string()).collect())
    }

    /// `S_k` for `k ≤ 4`. Elements are permutations of `0..k` in
    /// lexicographic order of their one-line notation, composed right to
    /// left: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(k: usize) -> Result<Self, GroupError> {
        if k > 4 {
            return Err(GroupError::SymmetricTooLarge(k));
        }
        let perms = permutations(k);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..k).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| format!("[{}]", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        Self::from_table_named(table, names)
    }

    /// Direct product; element `(a, b)` has index `a·|other| + b`.
    pub fn product(&self, other: &Self) -> Result<Self, GroupError> {
        let n = other.order;
        let order = self.order * n;
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        let table = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| self.mul(x / n, y / n) * n + other.mul(x % n, y % n))
                    .collect()
            })
            .collect();
        let names = if self.order == 1 {
            other.names.clone()
        } else {
            (0..order)
                .map(|x| format!("({},{})", self.names[x / n], other.names[x % n]))
                .collect()
        };
        Self::from_table_named(table, names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `h g h⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse[h])
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.commutes(a, b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    /// Size of the subgroup of elements commuting with every member of `set`.
    pub fn centralizer_order(&self, set: &[usize]) -> usize {
        self.elements().filter(|&g| set.iter().all(|&s| self.commutes(g, s))).count()
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|h| self.conjugate(g, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for x in 0..k {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// The homomorphism `Z/N → Q(ζ_N)^×`, `k ↦ ζ_N^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientEmbedding {
    modulus: u32,
}

impl CoefficientEmbedding {
    pub fn new(modulus: u32) -> Result<Self, ScalarError> {
        CyclotomicScalar::zero(modulus)?;
        Ok(Self { modulus })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn embed(&self, k: u64) -> CyclotomicScalar {
        CyclotomicScalar::root_of_unity(self.modulus, (k % self.modulus as u64) as i64)
            .expect("level validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders() {
        let trivial = FiniteGroup::build(&GroupSpec::Cyclic(1)).unwrap();
        assert_eq!(trivial.order(), 1);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.name(0), "[0 1 2]");

        let v = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]))
            .unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
        assert_eq!(v.name(3), "(1,1)");

        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::symmetric(5), Err(GroupError::SymmetricTooLarge(5)));
        assert_eq!(FiniteGroup::cyclic(65), Err(GroupError::TooLarge(65)));
    }

    #[test]
    fn conjugacy_classes_by_brute_force() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let classes = s3.conjugacy_classes();
        assert_eq!(classes.len(), 3);
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().conjugacy_classes().len(), 5);
    }

    #[test]
    fn centralizers() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let three_cycle = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
        assert_eq!(s3.centralizer_order(&[three_cycle]), 3);
        assert_eq!(s3.centralizer_order(&[]), 6);
        let transposition = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        assert_eq!(s3.centralizer_order(&[three_cycle, transposition]), 1);
    }

    #[test]
    fn lagrange_for_centralizers() {
        for g in [FiniteGroup::symmetric(3).unwrap(), FiniteGroup::symmetric(4).unwrap()] {
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(g.order() % g.centralizer_order(&[a, b]), 0);
                }
            }
        }
    }

    #[test]
    fn table_validation_reports_failures() {
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, len: 1, order: 2 })
        );
        assert_eq!(
            FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]),
            Err(GroupError::IdentityFails(0))
        );
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoInverse(1))
        );
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(loop5), Err(GroupError::NotAssociative(..))));
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { row: 0, col: 1, value: 2 })
        );
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec: GroupSpec = serde_json::from_str(r#"{"product":[{"cyclic":2},{"symmetric":3}]}"#).unwrap();
        assert_eq!(FiniteGroup::build(&spec).unwrap().order(), 12);
    }
}
