use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{RationalMatrix, TqftError};
use crate::action::Theory;
use crate::fields::{
    commutator, enumerate_homs, eval_word, format_word, hom_orbits, invert_word, parse_word, FieldOrbit, Presentation,
    PresentationSpec, Word,
};
use crate::groups::FiniteGroup;

/// A bordism `Y₀ → Y₁` recorded by fundamental groups: `π₁` of every
/// boundary component is sent into `π₁` of the component of `X` it bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bordism {
    source: Presentation,
    target: Presentation,
    total: Presentation,
    source_map: Vec<Word>,
    target_map: Vec<Word>,
    source_components: Vec<usize>,
    target_components: Vec<usize>,
}

/// Manifest form of a bordism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BordismSpec {
    pub source: PresentationSpec,
    pub target: PresentationSpec,
    pub total: PresentationSpec,
    pub source_map: Vec<String>,
    pub target_map: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_components: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_components: Option<Vec<usize>>,
}

fn owner_of_generators(p: &Presentation) -> Vec<usize> {
    let mut owner = vec![0; p.generator_count()];
    for (c, gens) in p.components().iter().enumerate() {
        for &g in gens {
            owner[g] = c;
        }
    }
    owner
}

/// The `X` component each boundary component lands in, read off the
/// generator images when not given.
fn boundary_components(
    boundary: &Presentation,
    total: &Presentation,
    map: &[Word],
    given: Option<Vec<usize>>,
    side: &str,
) -> Result<Vec<usize>, TqftError> {
    let bad = |msg: String| TqftError::Incompatible(format!("{side}: {msg}"));
    if map.len() != boundary.generator_count() {
        return Err(bad(format!("{} generator images for {} generators", map.len(), boundary.generator_count())));
    }
    let owner = owner_of_generators(total);
    for w in map {
        if let Some(&l) = w.iter().find(|l| l.unsigned_abs() as usize > total.generator_count()) {
            return Err(bad(format!("letter {l} outside the bordism generators")));
        }
    }
    let inferred: Vec<Option<usize>> = boundary
        .components()
        .iter()
        .map(|gens| gens.iter().flat_map(|&g| map[g].iter()).map(|&l| owner[l.unsigned_abs() as usize - 1]).next())
        .collect();
    let comps = match given {
        Some(c) => {
            if c.len() != boundary.component_count() || c.iter().any(|&x| x >= total.component_count()) {
                return Err(bad("component assignment does not match the presentations".into()));
            }
            c
        }
        None => inferred
            .iter()
            .map(|c| c.ok_or_else(|| bad("cannot infer the component of a boundary with trivial image".into())))
            .collect::<Result<_, _>>()?,
    };
    for (j, gens) in boundary.components().iter().enumerate() {
        for &g in gens {
            if map[g].iter().any(|&l| owner[l.unsigned_abs() as usize - 1] != comps[j]) {
                return Err(bad(format!("boundary component {j} maps into several components")));
            }
        }
    }
    Ok(comps)
}

impl Bordism {
    pub fn new(
        source: Presentation,
        target: Presentation,
        total: Presentation,
        source_map: Vec<Word>,
        target_map: Vec<Word>,
    ) -> Result<Self, TqftError> {
        Self::with_components(source, target, total, source_map, target_map, None, None)
    }

    pub fn with_components(
        source: Presentation,
        target: Presentation,
        total: Presentation,
        source_map: Vec<Word>,
        target_map: Vec<Word>,
        source_components: Option<Vec<usize>>,
        target_components: Option<Vec<usize>>,
    ) -> Result<Self, TqftError> {
        let source_components = boundary_components(&source, &total, &source_map, source_components, "source")?;
        let target_components = boundary_components(&target, &total, &target_map, target_components, "target")?;
        Ok(Self { source, target, total, source_map, target_map, source_components, target_components })
    }

    pub fn from_spec(spec: &BordismSpec) -> Result<Self, TqftError> {
        let words = |ws: &[String]| ws.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>, _>>();
        Self::with_components(
            Presentation::from_spec(&spec.source)?,
            Presentation::from_spec(&spec.target)?,
            Presentation::from_spec(&spec.total)?,
            words(&spec.source_map)?,
            words(&spec.target_map)?,
            spec.source_components.clone(),
            spec.target_components.clone(),
        )
    }

    pub fn to_spec(&self) -> BordismSpec {
        BordismSpec {
            source: self.source.to_spec(),
            target: self.target.to_spec(),
            total: self.total.to_spec(),
            source_map: self.source_map.iter().map(|w| format_word(w)).collect(),
            target_map: self.target_map.iter().map(|w| format_word(w)).collect(),
            source_components: Some(self.source_components.clone()),
            target_components: Some(self.target_components.clone()),
        }
    }

    fn circle() -> Presentation {
        Presentation::parse(1, &[]).expect("circle")
    }

    /// `Y × [0, 1]`.
    pub fn cylinder(y: &Presentation) -> Self {
        let id: Vec<Word> = (0..y.generator_count()).map(|g| vec![g as i32 + 1]).collect();
        let comps: Vec<usize> = (0..y.component_count()).collect();
        Self::with_components(y.clone(), y.clone(), y.clone(), id.clone(), id, Some(comps.clone()), Some(comps))
            .expect("cylinder")
    }

    /// The disk as a bordism `∅ → S¹`.
    pub fn cup() -> Self {
        Self::with_components(Presentation::empty(), Self::circle(), Presentation::trivial(), vec![], vec![vec![]], Some(vec![]), Some(vec![0]))
            .expect("cup")
    }

    /// The disk as a bordism `S¹ → ∅`.
    pub fn cap() -> Self {
        Self::cup().reverse()
    }

    /// `S¹ ⊔ S¹ → S¹`.
    pub fn pants() -> Self {
        let two = Self::circle().disjoint_union(&Self::circle());
        Self::new(two, Self::circle(), Presentation::new(2, vec![]).expect("free"), vec![vec![1], vec![2]], vec![vec![1, 2]])
            .expect("pants")
    }

    /// `S¹ → S¹ ⊔ S¹`.
    pub fn copants() -> Self {
        Self::pants().reverse()
    }

    /// The punctured torus with two boundary circles, `S¹ → S¹`.
    pub fn handle() -> Self {
        let total = Presentation::new(3, vec![]).expect("free");
        let mut out = vec![1];
        out.extend(commutator(1, 2));
        Self::new(Self::circle(), Self::circle(), total, vec![vec![1]], vec![out]).expect("handle")
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn total(&self) -> &Presentation {
        &self.total
    }

    /// The same manifold read backwards.
    pub fn reverse(&self) -> Self {
        Self {
            source: self.target.clone(),
            target: self.source.clone(),
            total: self.total.clone(),
            source_map: self.target_map.clone(),
            target_map: self.source_map.clone(),
            source_components: self.target_components.clone(),
            target_components: self.source_components.clone(),
        }
    }

    /// `self ⊔ other`.
    pub fn disjoint(&self, other: &Self) -> Self {
        let shift = |ws: &[Word]| -> Vec<Word> {
            let s = self.total.generator_count() as i32;
            ws.iter().map(|w| w.iter().map(|&l| l + l.signum() * s).collect()).collect()
        };
        let c = self.total.component_count();
        let cat = |a: &[Word], b: &[Word]| a.iter().cloned().chain(shift(b)).collect::<Vec<_>>();
        let cat_comps = |a: &[usize], b: &[usize]| a.iter().copied().chain(b.iter().map(|x| x + c)).collect::<Vec<_>>();
        Self {
            source: self.source.disjoint_union(&other.source),
            target: self.target.disjoint_union(&other.target),
            total: self.total.disjoint_union(&other.total),
            source_map: cat(&self.source_map, &other.source_map),
            target_map: cat(&self.target_map, &other.target_map),
            source_components: cat_comps(&self.source_components, &other.source_components),
            target_components: cat_comps(&self.target_components, &other.target_components),
        }
    }

    /// `next ∘ self`, glued along `self.target = next.source` by van Kampen:
    /// amalgamation on the first gluing between two pieces, an HNN stable
    /// letter on every further one.
    pub fn then(&self, next: &Self) -> Result<Self, TqftError> {
        if self.target != next.source {
            return Err(TqftError::Incompatible("target and source presentations differ".into()));
        }
        let n1 = self.total.generator_count();
        let c1 = self.total.component_count();
        let shift = |w: &Word| -> Word { w.iter().map(|&l| l + l.signum() * n1 as i32).collect() };

        let mut parent: Vec<usize> = (0..c1 + next.total.component_count()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }

        let mut generators = n1 + next.total.generator_count();
        let mut relators: Vec<Word> = self.total.relators().to_vec();
        relators.extend(next.total.relators().iter().map(shift));
        // Generator -> original piece, stable letters attached to a piece.
        let mut piece: Vec<usize> = owner_of_generators(&self.total);
        piece.extend(owner_of_generators(&next.total).into_iter().map(|c| c + c1));

        for (j, gens) in self.target.components().iter().enumerate() {
            let a = self.target_components[j];
            let b = next.source_components[j] + c1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                for &y in gens {
                    let mut r = self.target_map[y].clone();
                    r.extend(invert_word(&shift(&next.source_map[y])));
                    relators.push(r);
                }
            } else {
                let t = generators as i32 + 1;
                generators += 1;
                piece.push(a);
                for &y in gens {
                    let mut r = vec![t];
                    r.extend(self.target_map[y].iter().copied());
                    r.push(-t);
                    r.extend(invert_word(&shift(&next.source_map[y])));
                    relators.push(r);
                }
            }
        }

        let mut classes: BTreeMap<usize, usize> = BTreeMap::new();
        let roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
        for &r in &roots {
            let next_index = classes.len();
            classes.entry(r).or_insert(next_index);
        }
        let class_of = |p: usize| classes[&roots[p]];
        let mut components = vec![Vec::new(); classes.len()];
        for (g, &p) in piece.iter().enumerate() {
            components[class_of(p)].push(g);
        }
        let total = Presentation::with_components(generators, relators, components)?;
        Self::with_components(
            self.source.clone(),
            next.target.clone(),
            total,
            self.source_map.clone(),
            next.target_map.iter().map(shift).collect(),
            Some(self.source_components.iter().map(|&c| class_of(c)).collect()),
            Some(next.target_components.iter().map(|&c| class_of(c + c1)).collect()),
        )
    }
}

/// `Z(X)` in the orbit bases of `Z(Y₀)` (columns) and `Z(Y₁)` (rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BordismMatrix {
    pub source_basis: Vec<FieldOrbit>,
    pub target_basis: Vec<FieldOrbit>,
    pub matrix: RationalMatrix,
}

fn restrict(g: &FiniteGroup, map: &[Word], sigma: &[usize]) -> Vec<usize> {
    map.iter().map(|w| eval_word(g, w, sigma)).collect()
}

fn class_index(g: &FiniteGroup, basis: &[FieldOrbit], y: &Presentation, values: Vec<usize>) -> Option<usize> {
    let rep = crate::fields::orbit_decomposition(&[crate::fields::GaugeField::Hom(values)], g, y.components());
    basis.iter().position(|o| o.representative == rep[0].representative)
}

/// `M[β][α] = stab(α) · #{σ : σ∘i₀ ∈ α, σ∘i₁ ∈ β} / |Γ|^{c(X)}`, the
/// orbit sum `stab(α) Σ_[σ] 1/stab(σ)` written as a plain count.
pub fn bordism_matrix(theory: &Theory, b: &Bordism) -> Result<BordismMatrix, TqftError> {
    if !theory.is_untwisted() {
        return Err(TqftError::Unsupported("twisted bordism maps".into()));
    }
    let g = theory.group();
    let source_basis = hom_orbits(&b.source, g)?;
    let target_basis = hom_orbits(&b.target, g)?;
    let mut counts = vec![vec![0u64; source_basis.len()]; target_basis.len()];
    for sigma in enumerate_homs(&b.total, g)? {
        let s = restrict(g, &b.source_map, sigma.values());
        let t = restrict(g, &b.target_map, sigma.values());
        if !b.source.is_hom(g, &s) || !b.target.is_hom(g, &t) {
            return Err(TqftError::Incompatible("boundary map does not respect the relators".into()));
        }
        let alpha = class_index(g, &source_basis, &b.source, s).expect("restriction is a homomorphism");
        let beta = class_index(g, &target_basis, &b.target, t).expect("restriction is a homomorphism");
        counts[beta][alpha] += 1;
    }
    let denom = BigInt::from(g.order()).pow(b.total.component_count() as u32);
    let mut matrix = RationalMatrix::zeros(target_basis.len(), source_basis.len());
    for (beta, row) in counts.iter().enumerate() {
        for (alpha, &c) in row.iter().enumerate() {
            let stab = BigInt::from(source_basis[alpha].stabilizer_order);
            matrix.set(beta, alpha, BigRational::new(stab * BigInt::from(c), denom.clone()));
        }
    }
    Ok(BordismMatrix { source_basis, target_basis, matrix })
}
