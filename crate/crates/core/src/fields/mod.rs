//! Finite gauge fields: homomorphisms `π₁(X) → Γ` or flat edge colorings,
//! and their conjugation orbits.

mod presentation;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::FiniteGroup;
use crate::topology::{CochainMod2, DeltaComplex, TopologyError};

pub use presentation::{commutator, eval_word, format_word, invert_word, parse_word, Presentation, PresentationSpec, Word};

/// Upper bound on `|Γ|^generators` for homomorphism enumeration.
pub const HOM_BUDGET: f64 = 1e7;
/// Upper bound on search nodes for flat colorings.
pub const COLORING_NODE_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("invalid letter {0:?} in word (use a-z, A-Z for inverses)")]
    BadLetter(char),
    #[error("relator {relator} uses letter {letter} outside the generators")]
    BadRelator { relator: usize, letter: i32 },
    #[error("relator {0} mixes generators from different components")]
    RelatorSpansComponents(usize),
    #[error("components must partition the generators")]
    BadComponents,
    #[error("enumeration budget exceeded: {bound}")]
    Budget { bound: String },
    #[error("complex has {0} components; enumerate each component separately")]
    Disconnected(usize),
    #[error("mod-2 class requested for a group of order {0}, expected Z/2")]
    NotZ2(usize),
    #[error("expected an edge coloring with {expected} entries")]
    WrongField { expected: usize },
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaugeField {
    /// Images of the presentation generators.
    Hom(Vec<usize>),
    /// Holonomy on every edge, in edge order.
    Coloring(Vec<usize>),
}

impl GaugeField {
    pub fn values(&self) -> &[usize] {
        match self {
            GaugeField::Hom(v) | GaugeField::Coloring(v) => v,
        }
    }

    fn with_values(&self, v: Vec<usize>) -> Self {
        match self {
            GaugeField::Hom(_) => GaugeField::Hom(v),
            GaugeField::Coloring(_) => GaugeField::Coloring(v),
        }
    }
}

/// A conjugation class of gauge fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldOrbit {
    pub representative: GaugeField,
    pub orbit_size: usize,
    /// `#Aut`: product over components of the centralizer of the holonomy.
    pub stabilizer_order: usize,
}

/// All homomorphisms, in lexicographic order of generator images.
pub fn enumerate_homs(p: &Presentation, g: &FiniteGroup) -> Result<Vec<GaugeField>, FieldError> {
    let n = p.generator_count();
    let size = (g.order() as f64).powi(n as i32);
    if size > HOM_BUDGET {
        return Err(FieldError::Budget { bound: format!("|Γ|^generators = {}^{n} > {HOM_BUDGET:e}", g.order()) });
    }
    // Relators checked as soon as their largest generator is assigned.
    let mut due: Vec<Vec<&Word>> = vec![Vec::new(); n];
    for w in p.relators() {
        if let Some(max) = w.iter().map(|l| l.unsigned_abs() as usize - 1).max() {
            due[max].push(w);
        }
    }
    if n == 0 {
        return Ok(vec![GaugeField::Hom(vec![])]);
    }
    fn go(g: &FiniteGroup, due: &[Vec<&Word>], prefix: &mut Vec<usize>, out: &mut Vec<GaugeField>) {
        let k = prefix.len();
        if k == due.len() {
            out.push(GaugeField::Hom(prefix.clone()));
            return;
        }
        for x in g.elements() {
            prefix.push(x);
            if due[k].iter().all(|w| eval_word(g, w, prefix) == g.identity()) {
                go(g, due, prefix, out);
            }
            prefix.pop();
        }
    }
    let parts: Vec<Vec<GaugeField>> = g
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut prefix = vec![first];
            let mut out = Vec::new();
            if due[0].iter().all(|w| eval_word(g, w, &prefix) == g.identity()) {
                go(g, &due, &mut prefix, &mut out);
            }
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Lexicographically least conjugate, independently per component.
fn canonical(g: &FiniteGroup, values: &[usize], components: &[Vec<usize>]) -> Vec<usize> {
    let mut rep = values.to_vec();
    for comp in components {
        let best = g
            .elements()
            .map(|h| comp.iter().map(|&i| g.conjugate(values[i], h)).collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        for (&i, x) in comp.iter().zip(best) {
            rep[i] = x;
        }
    }
    rep
}

fn stabilizer(g: &FiniteGroup, values: &[usize], components: &[Vec<usize>]) -> usize {
    components
        .iter()
        .map(|comp| g.centralizer_order(&comp.iter().map(|&i| values[i]).collect::<Vec<_>>()))
        .product()
}

/// Orbits under conjugation, where `components` lists the coordinates that
/// are conjugated together. Orbits are ordered by representative.
pub fn orbit_decomposition(fields: &[GaugeField], g: &FiniteGroup, components: &[Vec<usize>]) -> Vec<FieldOrbit> {
    let mut orbits: BTreeMap<Vec<usize>, (usize, &GaugeField)> = BTreeMap::new();
    for f in fields {
        let rep = canonical(g, f.values(), components);
        orbits.entry(rep).or_insert((0, f)).0 += 1;
    }
    orbits
        .into_iter()
        .map(|(rep, (count, f))| FieldOrbit {
            stabilizer_order: stabilizer(g, &rep, components),
            representative: f.with_values(rep),
            orbit_size: count,
        })
        .collect()
}

/// Orbits of the homomorphisms of a presentation.
pub fn hom_orbits(p: &Presentation, g: &FiniteGroup) -> Result<Vec<FieldOrbit>, FieldError> {
    Ok(orbit_decomposition(&enumerate_homs(p, g)?, g, p.components()))
}

/// `Σ 1/stabilizer`.
pub fn groupoid_cardinality(orbits: &[FieldOrbit]) -> BigRational {
    orbits
        .iter()
        .map(|o| BigRational::new(BigInt::from(1), BigInt::from(o.stabilizer_order)))
        .fold(BigRational::from_integer(BigInt::from(0)), |a, b| a + b)
}

/// Edge coordinates grouped by connected component.
pub fn edge_components(k: &DeltaComplex) -> Vec<Vec<usize>> {
    let mut comps = vec![Vec::new(); k.component_count()];
    for e in 0..k.edge_count() {
        comps[k.component_of_vertex(k.vertices_of(1, e)[0])].push(e);
    }
    comps
}

/// Flat colorings with spanning-tree edges fixed to the identity, in
/// lexicographic order.
pub fn flat_fields_on_complex(k: &DeltaComplex, g: &FiniteGroup) -> Result<Vec<GaugeField>, FieldError> {
    if !k.is_connected() {
        return Err(FieldError::Disconnected(k.component_count()));
    }
    let tree = k.spanning_forest();
    let tris: Vec<[usize; 3]> = if k.dimension() >= 2 {
        (0..k.simplex_count(2)).map(|t| [k.edge_of(2, t, 0, 1), k.edge_of(2, t, 1, 2), k.edge_of(2, t, 0, 2)]).collect()
    } else {
        Vec::new()
    };
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); k.edge_count()];
    for (t, es) in tris.iter().enumerate() {
        for &e in es {
            incident[e].push(t);
        }
    }
    let start: Vec<Option<usize>> = tree.iter().map(|&t| t.then_some(g.identity())).collect();

    struct Search<'a> {
        g: &'a FiniteGroup,
        tris: &'a [[usize; 3]],
        incident: &'a [Vec<usize>],
        nodes: usize,
        out: Vec<GaugeField>,
    }

    impl Search<'_> {
        /// Propagates `g01·g12 = g02` from the given dirty edges.
        fn propagate(&self, state: &mut [Option<usize>], mut dirty: Vec<usize>) -> bool {
            let g = self.g;
            while let Some(e) = dirty.pop() {
                for &t in &self.incident[e] {
                    let [a, b, c] = self.tris[t];
                    match (state[a], state[b], state[c]) {
                        (Some(x), Some(y), Some(z)) => {
                            if g.mul(x, y) != z {
                                return false;
                            }
                        }
                        (Some(x), Some(y), None) => {
                            state[c] = Some(g.mul(x, y));
                            dirty.push(c);
                        }
                        (Some(x), None, Some(z)) => {
                            state[b] = Some(g.mul(g.inv(x), z));
                            dirty.push(b);
                        }
                        (None, Some(y), Some(z)) => {
                            state[a] = Some(g.mul(z, g.inv(y)));
                            dirty.push(a);
                        }
                        _ => {}
                    }
                }
            }
            true
        }

        fn go(&mut self, state: Vec<Option<usize>>) -> Result<(), FieldError> {
            self.nodes += 1;
            if self.nodes > COLORING_NODE_BUDGET {
                return Err(FieldError::Budget { bound: format!("more than {COLORING_NODE_BUDGET} search nodes") });
            }
            match state.iter().position(Option::is_none) {
                None => {
                    self.out.push(GaugeField::Coloring(state.into_iter().map(Option::unwrap).collect()));
                }
                Some(e) => {
                    for x in self.g.elements() {
                        let mut next = state.clone();
                        next[e] = Some(x);
                        if self.propagate(&mut next, vec![e]) {
                            self.go(next)?;
                        }
                    }
                }
            }
            Ok(())
        }
    }

    let mut search = Search { g, tris: &tris, incident: &incident, nodes: 0, out: Vec::new() };
    let mut state = start;
    let dirty: Vec<usize> = (0..k.edge_count()).filter(|&e| state[e].is_some()).collect();
    if search.propagate(&mut state, dirty) {
        search.go(state)?;
    }
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Orbits of flat colorings on a connected complex.
pub fn coloring_orbits(k: &DeltaComplex, g: &FiniteGroup) -> Result<Vec<FieldOrbit>, FieldError> {
    Ok(orbit_decomposition(&flat_fields_on_complex(k, g)?, g, &edge_components(k)))
}

/// A `Z/2` coloring read as a mod-2 1-cocycle.
pub fn field_class_mod2(k: &DeltaComplex, field: &GaugeField, g: &FiniteGroup) -> Result<CochainMod2, FieldError> {
    if g.order() != 2 {
        return Err(FieldError::NotZ2(g.order()));
    }
    match field {
        GaugeField::Coloring(v) if v.len() == k.edge_count() => {
            Ok(CochainMod2::new(k, 1, v.iter().map(|&x| x != g.identity()).collect())?)
        }
        _ => Err(FieldError::WrongField { expected: k.edge_count() }),
    }
}
