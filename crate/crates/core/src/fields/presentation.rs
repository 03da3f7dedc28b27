//! Finitely presented fundamental groups, one block per connected component.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::FieldError;
use crate::groups::FiniteGroup;
use crate::topology::DeltaComplex;

/// A letter `±(g + 1)`: generator `g` or its inverse.
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Word>,
    components: Vec<Vec<usize>>,
}

/// Manifest form: relators as letter strings, `a`–`z` with upper case for
/// inverses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub generators: usize,
    #[serde(default)]
    pub relators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<usize>>>,
}

pub fn parse_word(s: &str) -> Result<Word, FieldError> {
    s.chars()
        .map(|c| match c {
            'a'..='z' => Ok(c as i32 - 'a' as i32 + 1),
            'A'..='Z' => Ok(-(c as i32 - 'A' as i32 + 1)),
            _ => Err(FieldError::BadLetter(c)),
        })
        .collect()
}

pub fn format_word(w: &[i32]) -> String {
    w.iter()
        .map(|&l| {
            let g = l.unsigned_abs() as usize - 1;
            if g < 26 {
                let c = (b'a' + g as u8) as char;
                if l < 0 { c.to_ascii_uppercase().to_string() } else { c.to_string() }
            } else if l < 0 {
                format!("x{g}^-1 ")
            } else {
                format!("x{g} ")
            }
        })
        .collect()
}

pub fn invert_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn commutator(x: usize, y: usize) -> Word {
    let (x, y) = (x as i32 + 1, y as i32 + 1);
    vec![x, y, -x, -y]
}

/// Evaluates a word under an assignment of group elements to generators.
pub fn eval_word(g: &FiniteGroup, w: &[i32], assignment: &[usize]) -> usize {
    w.iter().fold(g.identity(), |acc, &l| {
        let x = assignment[l.unsigned_abs() as usize - 1];
        g.mul(acc, if l > 0 { x } else { g.inv(x) })
    })
}

fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(mut w: Word) -> Word {
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

impl Presentation {
    /// Connected presentation.
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self, FieldError> {
        Self::with_components(generators, relators, vec![(0..generators).collect()])
    }

    pub fn with_components(
        generators: usize,
        relators: Vec<Word>,
        components: Vec<Vec<usize>>,
    ) -> Result<Self, FieldError> {
        let mut owner = vec![usize::MAX; generators];
        for (c, gens) in components.iter().enumerate() {
            for &g in gens {
                if g >= generators || owner[g] != usize::MAX {
                    return Err(FieldError::BadComponents);
                }
                owner[g] = c;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(FieldError::BadComponents);
        }
        for (r, w) in relators.iter().enumerate() {
            let mut comp = None;
            for &l in w {
                let g = l.unsigned_abs() as usize;
                if l == 0 || g > generators {
                    return Err(FieldError::BadRelator { relator: r, letter: l });
                }
                match comp {
                    None => comp = Some(owner[g - 1]),
                    Some(c) if c != owner[g - 1] => return Err(FieldError::RelatorSpansComponents(r)),
                    _ => {}
                }
            }
        }
        Ok(Self { generators, relators, components })
    }

    pub fn parse(generators: usize, relators: &[&str]) -> Result<Self, FieldError> {
        Self::new(generators, relators.iter().map(|r| parse_word(r)).collect::<Result<_, _>>()?)
    }

    pub fn from_spec(spec: &PresentationSpec) -> Result<Self, FieldError> {
        let relators = spec.relators.iter().map(|r| parse_word(r)).collect::<Result<_, _>>()?;
        let components = spec.components.clone().unwrap_or_else(|| vec![(0..spec.generators).collect()]);
        Self::with_components(spec.generators, relators, components)
    }

    pub fn to_spec(&self) -> PresentationSpec {
        PresentationSpec {
            generators: self.generators,
            relators: self.relators.iter().map(|w| format_word(w)).collect(),
            components: if self.components.len() == 1 { None } else { Some(self.components.clone()) },
        }
    }

    /// The empty manifold: no components.
    pub fn empty() -> Self {
        Self { generators: 0, relators: vec![], components: vec![] }
    }

    /// A simply connected, connected space.
    pub fn trivial() -> Self {
        Self { generators: 0, relators: vec![], components: vec![vec![]] }
    }

    /// Closed orientable surface of genus `g`.
    pub fn surface(genus: usize) -> Self {
        let word = (0..genus).flat_map(|i| commutator(2 * i, 2 * i + 1)).collect::<Vec<_>>();
        let relators = if genus == 0 { vec![] } else { vec![word] };
        Self::new(2 * genus, relators).expect("valid surface presentation")
    }

    /// Fundamental groups of a Δ-complex: generators are the edges outside a
    /// spanning forest, relators come from triangles.
    pub fn from_complex(k: &DeltaComplex) -> Self {
        let tree = k.spanning_forest();
        let mut gen_of_edge = vec![None; k.edge_count()];
        let mut components = vec![Vec::new(); k.component_count()];
        let mut generators = 0;
        for e in 0..k.edge_count() {
            if !tree[e] {
                gen_of_edge[e] = Some(generators);
                components[k.component_of_vertex(k.vertices_of(1, e)[0])].push(generators);
                generators += 1;
            }
        }
        let letter = |e: usize, sign: i32| gen_of_edge[e].map(|g| sign * (g as i32 + 1));
        let mut relators = Vec::new();
        if k.dimension() >= 2 {
            for t in 0..k.simplex_count(2) {
                let w: Word = [letter(k.edge_of(2, t, 0, 1), 1), letter(k.edge_of(2, t, 1, 2), 1), letter(k.edge_of(2, t, 0, 2), -1)]
                    .into_iter()
                    .flatten()
                    .collect();
                if !w.is_empty() {
                    relators.push(w);
                }
            }
        }
        Self::with_components(generators, relators, components).expect("presentation of a valid complex")
    }

    /// Tietze reduction: repeatedly solve a relator for a generator that
    /// occurs in it exactly once and substitute it away.
    pub fn simplified(&self) -> Self {
        const MAX_WORD: usize = 256;
        let mut relators: Vec<Word> = self.relators.iter().map(|w| cyclic_reduce(free_reduce(w))).collect();
        let mut alive = vec![true; self.generators];
        loop {
            relators.retain(|w| !w.is_empty());
            let mut order: Vec<usize> = (0..relators.len()).collect();
            order.sort_by_key(|&r| (relators[r].len(), r));
            let pick = order.iter().find_map(|&r| {
                let w = &relators[r];
                w.iter().position(|&l| w.iter().filter(|&&m| m.abs() == l.abs()).count() == 1).map(|i| (r, i))
            });
            let Some((r, i)) = pick else { break };
            let w = relators.remove(r);
            let (l, u, v) = (w[i], &w[..i], &w[i + 1..]);
            // u x v = 1 gives x = u⁻¹v⁻¹; u x⁻¹ v = 1 gives x = v u.
            let value: Word = if l > 0 {
                invert_word(u).into_iter().chain(invert_word(v)).collect()
            } else {
                v.iter().chain(u).copied().collect()
            };
            let x = l.abs();
            let substituted: Vec<Word> = relators
                .iter()
                .map(|w| {
                    let expanded: Word = w
                        .iter()
                        .flat_map(|&m| {
                            if m == x {
                                value.clone()
                            } else if m == -x {
                                invert_word(&value)
                            } else {
                                vec![m]
                            }
                        })
                        .collect();
                    cyclic_reduce(free_reduce(&expanded))
                })
                .collect();
            if substituted.iter().any(|w| w.len() > MAX_WORD) {
                relators.insert(r, w);
                break;
            }
            relators = substituted;
            alive[x as usize - 1] = false;
        }
        // Renumber surviving generators.
        let mut new_index = vec![usize::MAX; self.generators];
        let mut count = 0;
        for g in 0..self.generators {
            if alive[g] {
                new_index[g] = count;
                count += 1;
            }
        }
        let relators = relators
            .into_iter()
            .map(|w| w.into_iter().map(|l| l.signum() * (new_index[l.unsigned_abs() as usize - 1] as i32 + 1)).collect())
            .collect();
        let components = self
            .components
            .iter()
            .map(|c| c.iter().filter(|&&g| alive[g]).map(|&g| new_index[g]).collect())
            .collect();
        Self { generators: count, relators, components }
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.generators as i32;
        let relators = self
            .relators
            .iter()
            .cloned()
            .chain(other.relators.iter().map(|w| w.iter().map(|&l| l + l.signum() * shift).collect()))
            .collect();
        let components = self
            .components
            .iter()
            .cloned()
            .chain(other.components.iter().map(|c| c.iter().map(|g| g + self.generators).collect()))
            .collect();
        Self { generators: self.generators + other.generators, relators, components }
    }

    /// `π₁(Y × S¹)`: a new central generator per component.
    pub fn times_circle(&self) -> Self {
        let mut relators = self.relators.clone();
        let mut components = self.components.clone();
        let mut generators = self.generators;
        for comp in components.iter_mut() {
            let t = generators;
            generators += 1;
            for &x in comp.iter() {
                relators.push(commutator(t, x));
            }
            comp.push(t);
        }
        Self { generators, relators, components }
    }

    /// Each component as its own connected presentation, generators renumbered
    /// in order.
    pub fn split_components(&self) -> Vec<Self> {
        self.components
            .iter()
            .map(|comp| {
                let index = |g: usize| comp.iter().position(|&x| x == g);
                let relators = self
                    .relators
                    .iter()
                    .filter(|w| w.first().is_some_and(|&l| index(l.unsigned_abs() as usize - 1).is_some()))
                    .map(|w| {
                        w.iter()
                            .map(|&l| l.signum() * (index(l.unsigned_abs() as usize - 1).unwrap() as i32 + 1))
                            .collect()
                    })
                    .collect();
                Self { generators: comp.len(), relators, components: vec![(0..comp.len()).collect()] }
            })
            .collect()
    }

    pub fn is_hom(&self, g: &FiniteGroup, assignment: &[usize]) -> bool {
        self.relators.iter().all(|w| eval_word(g, w, assignment) == g.identity())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generators).map(|g| format_word(&[g as i32 + 1])).collect();
        let rels: Vec<String> = self.relators.iter().map(|w| format_word(w)).collect();
        write!(f, "⟨{} | {}⟩", gens.join(","), rels.join(","))
    }
}
