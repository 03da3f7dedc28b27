//! Manifolds given by a presented mod-2 cohomology ring instead of a
//! triangulation.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::TopologyError;
use crate::fields::{Presentation, PresentationSpec};

/// Exponent vector over the ring generators.
pub type Monomial = Vec<u32>;

/// Polynomials over `Z/2` as sets of monomials.
type Poly = BTreeSet<Monomial>;

pub const REWRITE_STEP_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingGenerator {
    pub name: String,
    pub degree: usize,
    /// For degree-1 generators: the class as a homomorphism `π₁ → Z/2`,
    /// one bit per presentation generator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<Vec<bool>>,
}

/// `lhs ↦ Σ rhs`; an empty right side truncates to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteRule {
    pub lhs: Monomial,
    #[serde(default)]
    pub rhs: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicModel {
    name: String,
    dimension: usize,
    presentation: Presentation,
    generators: Vec<RingGenerator>,
    rules: Vec<RewriteRule>,
    pairing: BTreeSet<Monomial>,
    degree_one: Vec<usize>,
}

/// Manifest form of a model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub name: String,
    pub dimension: usize,
    pub presentation: PresentationSpec,
    pub generators: Vec<RingGenerator>,
    pub rules: Vec<RewriteRule>,
    pub pairing: Vec<Monomial>,
}

fn total_degree(gens: &[RingGenerator], m: &[u32]) -> usize {
    gens.iter().zip(m).map(|(g, &e)| g.degree * e as usize).sum()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn model_err(msg: impl Into<String>) -> TopologyError {
    TopologyError::Model(msg.into())
}

/// Rank of a set of bit vectors over `Z/2`.
fn rank_gf2(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c] {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        r += 1;
    }
    r
}

impl AlgebraicModel {
    pub fn new(
        name: impl Into<String>,
        dimension: usize,
        presentation: Presentation,
        generators: Vec<RingGenerator>,
        rules: Vec<RewriteRule>,
        pairing: Vec<Monomial>,
    ) -> Result<Self, TopologyError> {
        if !presentation.is_connected() {
            return Err(model_err("presentation must be connected"));
        }
        let k = generators.len();
        let pres_gens = presentation.generator_count();
        let mut degree_one = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(model_err(format!("generator {} has degree 0", g.name)));
            }
            match (&g.hom, g.degree) {
                (Some(h), 1) => {
                    if h.len() != pres_gens {
                        return Err(model_err(format!("class {} needs one bit per π₁ generator", g.name)));
                    }
                    for w in presentation.relators() {
                        let parity = w.iter().filter(|&&l| h[l.unsigned_abs() as usize - 1]).count() % 2;
                        if parity != 0 {
                            return Err(model_err(format!("class {} does not kill every relator", g.name)));
                        }
                    }
                    degree_one.push(i);
                }
                (None, 1) => return Err(model_err(format!("degree-1 class {} needs a homomorphism", g.name))),
                (Some(_), _) => return Err(model_err(format!("generator {} of degree > 1 has a homomorphism", g.name))),
                (None, _) => {}
            }
        }
        // Degree-1 classes must form a basis of Hom(π₁, Z/2).
        let homs: Vec<Vec<bool>> = degree_one.iter().map(|&i| generators[i].hom.clone().unwrap()).collect();
        if rank_gf2(homs.clone()) != homs.len() {
            return Err(model_err("degree-1 classes are linearly dependent"));
        }
        let relator_rows: Vec<Vec<bool>> = presentation
            .relators()
            .iter()
            .map(|w| {
                let mut row = vec![false; pres_gens];
                for &l in w {
                    row[l.unsigned_abs() as usize - 1] ^= true;
                }
                row
            })
            .collect();
        if pres_gens - rank_gf2(relator_rows) != homs.len() {
            return Err(model_err("degree-1 classes do not span H¹(π₁; Z/2)"));
        }
        for r in &rules {
            if r.lhs.len() != k || r.rhs.iter().any(|m| m.len() != k) {
                return Err(model_err("rule monomials must have one exponent per generator"));
            }
            let d = total_degree(&generators, &r.lhs);
            if r.rhs.iter().any(|m| total_degree(&generators, m) != d) {
                return Err(model_err("rules must preserve total degree"));
            }
            if r.lhs.iter().all(|&e| e == 0) {
                return Err(model_err("a rule cannot rewrite the unit"));
            }
        }
        for m in &pairing {
            if m.len() != k || total_degree(&generators, m) != dimension {
                return Err(model_err("pairing monomials must have the manifold's dimension"));
            }
        }
        Ok(Self {
            name: name.into(),
            dimension,
            presentation,
            generators,
            rules,
            pairing: pairing.into_iter().collect(),
            degree_one,
        })
    }

    pub fn from_spec(spec: &ModelSpec) -> Result<Self, TopologyError> {
        let presentation = Presentation::from_spec(&spec.presentation).map_err(|e| model_err(e.to_string()))?;
        Self::new(
            spec.name.clone(),
            spec.dimension,
            presentation,
            spec.generators.clone(),
            spec.rules.clone(),
            spec.pairing.clone(),
        )
    }

    pub fn to_spec(&self) -> ModelSpec {
        ModelSpec {
            name: self.name.clone(),
            dimension: self.dimension,
            presentation: self.presentation.to_spec(),
            generators: self.generators.clone(),
            rules: self.rules.clone(),
            pairing: self.pairing.iter().cloned().collect(),
        }
    }

    /// `RPⁿ`: `Z/2[a]/(a^{n+1})`.
    pub fn real_projective(n: usize) -> Result<Self, TopologyError> {
        if n == 0 {
            return Err(model_err("RP^0 is a point"));
        }
        let presentation = if n == 1 { Presentation::parse(1, &[]) } else { Presentation::parse(1, &["aa"]) }
            .expect("static presentation");
        Self::new(
            format!("RP{n}"),
            n,
            presentation,
            vec![RingGenerator { name: "a".into(), degree: 1, hom: Some(vec![true]) }],
            vec![RewriteRule { lhs: vec![n as u32 + 1], rhs: vec![] }],
            vec![vec![n as u32]],
        )
    }

    /// Dold manifold `P(m, l)` of dimension `m + 2l`:
    /// `Z/2[c, d]/(c^{m+1}, d^{l+1})` with `|c| = 1`, `|d| = 2`.
    pub fn dold(m: usize, l: usize) -> Result<Self, TopologyError> {
        if m == 0 {
            return Err(model_err("P(0, l) is simply connected; use m ≥ 1"));
        }
        // P(1, l) fibres over a circle, so π₁ is infinite cyclic.
        let presentation = if m == 1 { Presentation::parse(1, &[]) } else { Presentation::parse(1, &["aa"]) }
            .expect("static presentation");
        Self::new(
            format!("P({m},{l})"),
            m + 2 * l,
            presentation,
            vec![
                RingGenerator { name: "c".into(), degree: 1, hom: Some(vec![true]) },
                RingGenerator { name: "d".into(), degree: 2, hom: None },
            ],
            vec![
                RewriteRule { lhs: vec![m as u32 + 1, 0], rhs: vec![] },
                RewriteRule { lhs: vec![0, l as u32 + 1], rhs: vec![] },
            ],
            vec![vec![m as u32, l as u32]],
        )
    }

    /// Orientable surface of genus `g ≥ 1`.
    pub fn surface(genus: usize) -> Result<Self, TopologyError> {
        if genus == 0 {
            return Err(model_err("the sphere has no degree-1 classes; use genus ≥ 1"));
        }
        let k = 2 * genus;
        let generators = (0..k)
            .map(|i| RingGenerator {
                name: format!("{}{}", if i % 2 == 0 { 'x' } else { 'y' }, i / 2 + 1),
                degree: 1,
                hom: Some((0..k).map(|j| j == i).collect()),
            })
            .collect();
        let mono = |i: usize, j: usize| {
            let mut m = vec![0u32; k];
            m[i] += 1;
            m[j] += 1;
            m
        };
        let mut rules = Vec::new();
        for i in 0..k {
            for j in i..k {
                let dual = i % 2 == 0 && j == i + 1;
                if !dual {
                    rules.push(RewriteRule { lhs: mono(i, j), rhs: vec![] });
                }
            }
        }
        let pairing = (0..genus).map(|i| mono(2 * i, 2 * i + 1)).collect();
        Self::new(format!("Sigma{genus}"), 2, Presentation::surface(genus), generators, rules, pairing)
    }

    /// Klein bottle `⟨a, b | abAb⟩`. The class dual to `b` squares to the
    /// top class; the other one squares to zero.
    pub fn klein() -> Result<Self, TopologyError> {
        let presentation = Presentation::parse(2, &["abAb"]).expect("static presentation");
        Self::new(
            "Klein",
            2,
            presentation,
            vec![
                RingGenerator { name: "x".into(), degree: 1, hom: Some(vec![true, false]) },
                RingGenerator { name: "y".into(), degree: 1, hom: Some(vec![false, true]) },
            ],
            vec![
                RewriteRule { lhs: vec![2, 0], rhs: vec![] },
                RewriteRule { lhs: vec![0, 2], rhs: vec![vec![1, 1]] },
            ],
            vec![vec![1, 1]],
        )
    }

    /// Cartesian product; the cohomology ring is the tensor product.
    pub fn product(&self, other: &Self) -> Result<Self, TopologyError> {
        let (ka, kb) = (self.generators.len(), other.generators.len());
        let (pa, pb) = (self.presentation.generator_count(), other.presentation.generator_count());
        let shift = pa as i32;
        let mut relators: Vec<Vec<i32>> = self.presentation.relators().to_vec();
        relators.extend(
            other.presentation.relators().iter().map(|w| w.iter().map(|&l| l + l.signum() * shift).collect()),
        );
        for x in 0..pa {
            for y in 0..pb {
                relators.push(crate::fields::commutator(x, pa + y));
            }
        }
        let presentation = Presentation::new(pa + pb, relators).map_err(|e| model_err(e.to_string()))?;
        let pad_hom = |h: &Option<Vec<bool>>, left: bool| {
            h.as_ref().map(|h| {
                if left {
                    h.iter().copied().chain(std::iter::repeat_n(false, pb)).collect()
                } else {
                    std::iter::repeat_n(false, pa).chain(h.iter().copied()).collect()
                }
            })
        };
        let generators = self
            .generators
            .iter()
            .map(|g| RingGenerator { hom: pad_hom(&g.hom, true), ..g.clone() })
            .chain(other.generators.iter().map(|g| RingGenerator { hom: pad_hom(&g.hom, false), ..g.clone() }))
            .collect();
        let left = |m: &Monomial| m.iter().copied().chain(std::iter::repeat_n(0, kb)).collect::<Monomial>();
        let right = |m: &Monomial| std::iter::repeat_n(0, ka).chain(m.iter().copied()).collect::<Monomial>();
        let rules = self
            .rules
            .iter()
            .map(|r| RewriteRule { lhs: left(&r.lhs), rhs: r.rhs.iter().map(left).collect() })
            .chain(other.rules.iter().map(|r| RewriteRule { lhs: right(&r.lhs), rhs: r.rhs.iter().map(right).collect() }))
            .collect();
        let pairing = self
            .pairing
            .iter()
            .flat_map(|a| other.pairing.iter().map(move |b| a.iter().chain(b).copied().collect()))
            .collect();
        Self::new(
            format!("{}x{}", self.name, other.name),
            self.dimension + other.dimension,
            presentation,
            generators,
            rules,
            pairing,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[RingGenerator] {
        &self.generators
    }

    /// `β₁` mod 2: the number of degree-1 generators.
    pub fn first_betti(&self) -> usize {
        self.degree_one.len()
    }

    fn rewrite_once(&self, m: &Monomial) -> Option<Vec<Vec<Monomial>>> {
        let results: Vec<Vec<Monomial>> = self
            .rules
            .iter()
            .filter(|r| divides(&r.lhs, m))
            .map(|r| {
                r.rhs
                    .iter()
                    .map(|t| m.iter().zip(&r.lhs).zip(t).map(|((&x, &l), &y)| x - l + y).collect())
                    .collect()
            })
            .collect();
        (!results.is_empty()).then_some(results)
    }

    /// Normal form using the first applicable rule at every step.
    fn normal_form(&self, p: Poly, steps: &mut usize) -> Result<Poly, TopologyError> {
        let mut done = Poly::new();
        let mut work = p;
        while let Some(m) = work.pop_first() {
            match self.rewrite_once(&m) {
                None => {
                    if !done.remove(&m) {
                        done.insert(m);
                    }
                }
                Some(options) => {
                    *steps += 1;
                    if *steps > REWRITE_STEP_BUDGET {
                        return Err(TopologyError::RewriteBudget(REWRITE_STEP_BUDGET));
                    }
                    for t in options.into_iter().next().unwrap() {
                        if !work.remove(&t) {
                            work.insert(t);
                        }
                    }
                }
            }
        }
        Ok(done)
    }

    /// Every applicable rule must lead to the same normal form, at every
    /// monomial met while reducing `p`.
    fn check_confluence(&self, p: &Poly, memo: &mut HashMap<Monomial, Poly>, steps: &mut usize) -> Result<(), TopologyError> {
        let mut stack: Vec<Monomial> = p.iter().cloned().collect();
        while let Some(m) = stack.pop() {
            if memo.contains_key(&m) {
                continue;
            }
            let nf = self.normal_form(Poly::from([m.clone()]), steps)?;
            if let Some(options) = self.rewrite_once(&m) {
                for option in options {
                    let alt = self.normal_form(option.iter().cloned().collect(), steps)?;
                    if alt != nf {
                        return Err(TopologyError::NotConfluent(m));
                    }
                    stack.extend(option);
                }
            }
            memo.insert(m, nf);
        }
        Ok(())
    }

    /// `⟨[X], vⁿ⟩` where `v` has one coefficient per degree-1 generator.
    pub fn tau(&self, v: &[bool]) -> Result<bool, TopologyError> {
        if v.len() != self.degree_one.len() {
            return Err(TopologyError::WrongLength { expected: self.degree_one.len(), got: v.len() });
        }
        let k = self.generators.len();
        let mut steps = 0;
        let mut memo = HashMap::new();
        let mut p: Poly = Poly::from([vec![0u32; k]]);
        for _ in 0..self.dimension {
            let mut next = Poly::new();
            for m in &p {
                for (&gi, _) in self.degree_one.iter().zip(v).filter(|(_, &c)| c) {
                    let mut t = m.clone();
                    t[gi] += 1;
                    if !next.remove(&t) {
                        next.insert(t);
                    }
                }
            }
            self.check_confluence(&next, &mut memo, &mut steps)?;
            p = self.normal_form(next, &mut steps)?;
        }
        Ok(p.iter().filter(|m| self.pairing.contains(*m)).count() % 2 == 1)
    }

    /// Coordinates of a homomorphism `π₁ → Z/2` in the degree-1 basis.
    pub fn coordinates_of_hom(&self, hom: &[bool]) -> Result<Vec<bool>, TopologyError> {
        let b = self.degree_one.len();
        (0u64..1 << b)
            .map(|mask| (0..b).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
            .find(|coords| {
                let mut sum = vec![false; hom.len()];
                for (c, &gi) in coords.iter().zip(&self.degree_one) {
                    if *c {
                        for (s, h) in sum.iter_mut().zip(self.generators[gi].hom.as_ref().unwrap()) {
                            *s ^= h;
                        }
                    }
                }
                sum == hom
            })
            .ok_or_else(|| model_err("map does not define a homomorphism to Z/2"))
    }

    /// τ on every basis vector `v_k`.
    pub fn tau_on_basis(&self) -> Result<Vec<bool>, TopologyError> {
        let b = self.degree_one.len();
        (0..b).map(|i| self.tau(&(0..b).map(|j| j == i).collect::<Vec<_>>())).collect()
    }
}

/// Parses a monomial like `c^2 d` against generator names (test helper and
/// manifest convenience).
pub fn parse_monomial(model: &AlgebraicModel, s: &str) -> Result<Monomial, TopologyError> {
    let mut m = vec![0u32; model.generators.len()];
    for part in s.split_whitespace() {
        let (name, exp) = match part.split_once('^') {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| model_err(format!("bad exponent in {part}")))?),
            None => (part, 1),
        };
        let i = model
            .generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| model_err(format!("unknown generator {name}")))?;
        m[i] += exp;
    }
    Ok(m)
}
