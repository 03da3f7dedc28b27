//! The JSON manifest: named definitions plus a list of jobs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::CliError;
use crate::action::Theory;
use crate::fields::{Presentation, PresentationSpec};
use crate::groups::{FiniteGroup, GroupCocycle, GroupSpec};
use crate::topology::{builtin_complex, builtin_presentation, AlgebraicModel, Builtin, ComplexInput, DeltaComplex, ModelSpec};
use crate::tqft::{Bordism, BordismSpec, Manifold};

pub const SCHEMA: &str = "dwtqft/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema: String,
    #[serde(default)]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default)]
    pub cocycles: BTreeMap<String, CocycleDef>,
    #[serde(default)]
    pub manifolds: BTreeMap<String, ManifoldDef>,
    #[serde(default)]
    pub bordisms: BTreeMap<String, BordismDef>,
    #[serde(default)]
    pub theories: BTreeMap<String, TheoryDef>,
    #[serde(default)]
    pub jobs: Vec<JobDef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CocycleDef {
    /// Values on `Γⁿ` in lexicographic order of arguments.
    Values { group: String, degree: usize, modulus: u32, values: Vec<u32> },
    /// `w₁ⁿ` on `Z/2`.
    W1Power { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModelDef {
    /// `real_projective(n)`, `dold(m,l)`, `surface(g)` or `klein`.
    Named(String),
    Spec(ModelSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ManifoldDef {
    Builtin(Builtin),
    Complex(ComplexInput),
    Model(ModelDef),
    Presentation(PresentationSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BordismDef {
    /// `cylinder`, `cup`, `cap`, `pants`, `copants` or `handle`.
    Builtin(String),
    Spec(BordismSpec),
    /// Applied left to right: the first bordism acts first.
    Compose(Vec<String>),
    Disjoint(Vec<String>),
    Reverse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoryKindDef {
    Untwisted,
    W1Power,
    Cocycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoryDef {
    pub kind: TheoryKindDef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<String>,
    /// Checked against the modulus implied by the other fields.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u32>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    #[default]
    Orbits,
    Fields,
    ProductFormula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum JobDef {
    Closed {
        id: String,
        theory: String,
        manifold: String,
        #[serde(default)]
        route: Route,
    },
    StateSpace {
        id: String,
        theory: String,
        manifold: String,
    },
    DimViaTorus {
        id: String,
        theory: String,
        manifold: String,
    },
    Bordism {
        id: String,
        theory: String,
        bordism: String,
    },
    /// Partition function before and after random coboundary shifts.
    CoboundaryInvariance {
        id: String,
        theory: String,
        manifold: String,
        samples: usize,
    },
    Table7 {
        id: String,
    },
}

impl JobDef {
    pub fn id(&self) -> &str {
        match self {
            JobDef::Closed { id, .. }
            | JobDef::StateSpace { id, .. }
            | JobDef::DimViaTorus { id, .. }
            | JobDef::Bordism { id, .. }
            | JobDef::CoboundaryInvariance { id, .. }
            | JobDef::Table7 { id } => id,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            JobDef::Closed { .. } => "closed",
            JobDef::StateSpace { .. } => "state_space",
            JobDef::DimViaTorus { .. } => "dim_via_torus",
            JobDef::Bordism { .. } => "bordism",
            JobDef::CoboundaryInvariance { .. } => "coboundary_invariance",
            JobDef::Table7 { .. } => "table7",
        }
    }
}

fn schema_err(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn unresolved(kind: &str, name: &str) -> CliError {
    CliError::Reference(format!("unknown {kind} {name:?}"))
}

/// Parses `name(a,b)` into the name and integer arguments.
fn call(s: &str) -> Option<(&str, Vec<usize>)> {
    let s = s.trim();
    match s.split_once('(') {
        None => Some((s, Vec::new())),
        Some((name, rest)) => {
            let args = rest.strip_suffix(')')?;
            let parsed = args.split(',').map(|a| a.trim().parse().ok()).collect::<Option<Vec<usize>>>()?;
            Some((name.trim(), parsed))
        }
    }
}

pub fn named_model(name: &str) -> Result<AlgebraicModel, CliError> {
    let bad = || schema_err(format!("unknown model {name:?}"));
    let (head, args) = call(name).ok_or_else(bad)?;
    let model = match (head, args.as_slice()) {
        ("real_projective", [n]) => AlgebraicModel::real_projective(*n),
        ("dold", [m, l]) => AlgebraicModel::dold(*m, *l),
        ("surface", [g]) => AlgebraicModel::surface(*g),
        ("klein", []) => AlgebraicModel::klein(),
        _ => return Err(bad()),
    };
    model.map_err(|e| schema_err(format!("model {name:?}: {e}")))
}

pub fn named_bordism(name: &str) -> Result<Bordism, CliError> {
    Ok(match name {
        "cylinder" => Bordism::cylinder(&Presentation::parse(1, &[]).expect("circle")),
        "cup" => Bordism::cup(),
        "cap" => Bordism::cap(),
        "pants" => Bordism::pants(),
        "copants" => Bordism::copants(),
        "handle" => Bordism::handle(),
        _ => return Err(schema_err(format!("unknown bordism {name:?}"))),
    })
}

pub const NAMED_MODELS: &[&str] = &["real_projective(<n>)", "dold(<m>,<l>)", "surface(<g>)", "klein"];
pub const NAMED_BORDISMS: &[&str] = &["cylinder", "cup", "cap", "pants", "copants", "handle"];

/// A manifest with every definition built and every reference checked.
pub struct Resolved<'a> {
    pub manifest: &'a Manifest,
    groups: BTreeMap<&'a str, FiniteGroup>,
    cocycles: BTreeMap<&'a str, GroupCocycle>,
    manifolds: BTreeMap<&'a str, Manifold>,
    bordisms: BTreeMap<&'a str, Bordism>,
    theories: BTreeMap<&'a str, Theory>,
}

impl<'a> Resolved<'a> {
    pub fn new(manifest: &'a Manifest) -> Result<Self, CliError> {
        if manifest.schema != SCHEMA {
            return Err(schema_err(format!("schema {:?}, expected {SCHEMA:?}", manifest.schema)));
        }
        let mut groups = BTreeMap::new();
        for (name, spec) in &manifest.groups {
            let g = FiniteGroup::build(spec).map_err(|e| schema_err(format!("group {name:?}: {e}")))?;
            groups.insert(name.as_str(), g);
        }
        let group = |name: &str| groups.get(name).cloned().ok_or_else(|| unresolved("group", name));

        let mut cocycles = BTreeMap::new();
        for (name, def) in &manifest.cocycles {
            let omega = match def {
                CocycleDef::Values { group: g, degree, modulus, values } => {
                    GroupCocycle::from_values(&group(g)?, *degree, *modulus, values.clone())
                }
                CocycleDef::W1Power { degree } => GroupCocycle::w1_power(*degree),
            }
            .map_err(|e| schema_err(format!("cocycle {name:?}: {e}")))?;
            cocycles.insert(name.as_str(), omega);
        }

        let mut manifolds = BTreeMap::new();
        for (name, def) in &manifest.manifolds {
            let err = |e: String| schema_err(format!("manifold {name:?}: {e}"));
            let m = match def {
                ManifoldDef::Builtin(b) => Manifold::Complex(builtin_complex(b).map_err(|e| err(e.to_string()))?),
                ManifoldDef::Complex(input) => {
                    Manifold::Complex(DeltaComplex::from_input(input).map_err(|e| err(e.to_string()))?)
                }
                ManifoldDef::Model(ModelDef::Named(n)) => Manifold::Model(named_model(n)?),
                ManifoldDef::Model(ModelDef::Spec(spec)) => {
                    Manifold::Model(AlgebraicModel::from_spec(spec).map_err(|e| err(e.to_string()))?)
                }
                ManifoldDef::Presentation(spec) => {
                    Manifold::Presentation(Presentation::from_spec(spec).map_err(|e| err(e.to_string()))?)
                }
            };
            manifolds.insert(name.as_str(), m);
        }

        let mut bordisms = BTreeMap::new();
        for name in manifest.bordisms.keys() {
            let b = build_bordism(manifest, name, &mut BTreeSet::new())?;
            bordisms.insert(name.as_str(), b);
        }

        let mut theories = BTreeMap::new();
        for (name, def) in &manifest.theories {
            let err = |e: String| schema_err(format!("theory {name:?}: {e}"));
            let theory = match def.kind {
                TheoryKindDef::Untwisted => {
                    let g = def.group.as_deref().ok_or_else(|| err("untwisted theory needs a group".into()))?;
                    Theory::untwisted(group(g)?)
                }
                TheoryKindDef::W1Power => {
                    let n = def.n.ok_or_else(|| err("w1_power theory needs n".into()))?;
                    let t = Theory::w1_power(n).map_err(|e| err(e.to_string()))?;
                    if let Some(g) = &def.group {
                        if group(g)? != *t.group() {
                            return Err(err("w1_power needs the group Z/2".into()));
                        }
                    }
                    t
                }
                TheoryKindDef::Cocycle => {
                    let c = def.cocycle.as_deref().ok_or_else(|| err("cocycle theory needs a cocycle".into()))?;
                    let omega = cocycles.get(c).cloned().ok_or_else(|| unresolved("cocycle", c))?;
                    if let Some(g) = &def.group {
                        if group(g)? != *omega.group() {
                            return Err(err("cocycle lives on a different group".into()));
                        }
                    }
                    Theory::cocycle(omega).map_err(|e| err(e.to_string()))?
                }
            };
            if let Some(m) = def.modulus {
                if m != theory.modulus() {
                    return Err(err(format!("modulus {m} but the theory takes values in Z/{}", theory.modulus())));
                }
            }
            theories.insert(name.as_str(), theory);
        }

        let mut ids = BTreeSet::new();
        let resolved = Self { manifest, groups, cocycles, manifolds, bordisms, theories };
        for job in &manifest.jobs {
            if !ids.insert(job.id()) {
                return Err(schema_err(format!("duplicate job id {:?}", job.id())));
            }
            match job {
                JobDef::Closed { theory, manifold, .. }
                | JobDef::StateSpace { theory, manifold, .. }
                | JobDef::DimViaTorus { theory, manifold, .. }
                | JobDef::CoboundaryInvariance { theory, manifold, .. } => {
                    resolved.theory(theory)?;
                    resolved.manifold(manifold)?;
                }
                JobDef::Bordism { theory, bordism, .. } => {
                    resolved.theory(theory)?;
                    resolved.bordism(bordism)?;
                }
                JobDef::Table7 { .. } => {}
            }
        }
        Ok(resolved)
    }

    pub fn theory(&self, name: &str) -> Result<&Theory, CliError> {
        self.theories.get(name).ok_or_else(|| unresolved("theory", name))
    }

    pub fn manifold(&self, name: &str) -> Result<&Manifold, CliError> {
        self.manifolds.get(name).ok_or_else(|| unresolved("manifold", name))
    }

    pub fn bordism(&self, name: &str) -> Result<&Bordism, CliError> {
        self.bordisms.get(name).ok_or_else(|| unresolved("bordism", name))
    }

    /// `π₁` of a named manifold, for jobs that only need the presentation.
    pub fn presentation(&self, name: &str) -> Result<Presentation, CliError> {
        Ok(match &self.manifest.manifolds[name] {
            ManifoldDef::Builtin(b) => builtin_presentation(b),
            ManifoldDef::Presentation(_) | ManifoldDef::Complex(_) | ManifoldDef::Model(_) => match self.manifold(name)? {
                Manifold::Presentation(p) => p.clone(),
                Manifold::Model(m) => m.presentation().clone(),
                Manifold::Complex(k) => Presentation::from_complex(k).simplified(),
            },
        })
    }

    pub fn definition_counts(&self) -> Value {
        json!({
            "groups": self.groups.len(),
            "cocycles": self.cocycles.len(),
            "manifolds": self.manifolds.len(),
            "bordisms": self.bordisms.len(),
            "theories": self.theories.len(),
            "jobs": self.manifest.jobs.len(),
        })
    }

    /// The job plus every definition it refers to, transitively.
    pub fn job_inputs(&self, job: &JobDef) -> Value {
        let m = self.manifest;
        let theory_inputs = |name: &str| {
            let def = &m.theories[name];
            let group = def.group.as_ref().map(|g| json!(m.groups[g]));
            let cocycle = def.cocycle.as_ref().map(|c| {
                let d = &m.cocycles[c];
                let group = match d {
                    CocycleDef::Values { group, .. } => Some(json!(m.groups[group])),
                    CocycleDef::W1Power { .. } => None,
                };
                json!({"definition": d, "group": group})
            });
            json!({"definition": def, "group": group, "cocycle": cocycle})
        };
        let mut bordisms = BTreeMap::new();
        let job_value = json!(job);
        match job {
            JobDef::Closed { theory, manifold, .. }
            | JobDef::StateSpace { theory, manifold, .. }
            | JobDef::DimViaTorus { theory, manifold, .. }
            | JobDef::CoboundaryInvariance { theory, manifold, .. } => {
                json!({"job": job_value, "theory": theory_inputs(theory), "manifold": m.manifolds[manifold]})
            }
            JobDef::Bordism { theory, bordism, .. } => {
                collect_bordisms(m, bordism, &mut bordisms);
                json!({"job": job_value, "theory": theory_inputs(theory), "bordisms": bordisms})
            }
            JobDef::Table7 { .. } => json!({"job": job_value}),
        }
    }
}

fn collect_bordisms<'a>(m: &'a Manifest, name: &'a str, out: &mut BTreeMap<&'a str, &'a BordismDef>) {
    let Some(def) = m.bordisms.get(name) else { return };
    if out.insert(name, def).is_some() {
        return;
    }
    match def {
        BordismDef::Compose(parts) | BordismDef::Disjoint(parts) => {
            for p in parts {
                collect_bordisms(m, p, out);
            }
        }
        BordismDef::Reverse(p) => collect_bordisms(m, p, out),
        BordismDef::Builtin(_) | BordismDef::Spec(_) => {}
    }
}

fn build_bordism(m: &Manifest, name: &str, stack: &mut BTreeSet<String>) -> Result<Bordism, CliError> {
    let def = m.bordisms.get(name).ok_or_else(|| unresolved("bordism", name))?;
    if !stack.insert(name.to_string()) {
        return Err(schema_err(format!("bordism {name:?} refers to itself")));
    }
    let err = |e: String| schema_err(format!("bordism {name:?}: {e}"));
    let mut parts = |names: &[String]| -> Result<Vec<Bordism>, CliError> {
        if names.is_empty() {
            return Err(err("empty list".into()));
        }
        names.iter().map(|n| build_bordism(m, n, stack)).collect()
    };
    let b = match def {
        BordismDef::Builtin(n) => named_bordism(n)?,
        BordismDef::Spec(spec) => Bordism::from_spec(spec).map_err(|e| err(e.to_string()))?,
        BordismDef::Compose(names) => {
            let bs = parts(names)?;
            let mut iter = bs.into_iter();
            let first = iter.next().expect("nonempty");
            iter.try_fold(first, |acc, b| acc.then(&b)).map_err(|e| err(e.to_string()))?
        }
        BordismDef::Disjoint(names) => {
            let bs = parts(names)?;
            let mut iter = bs.into_iter();
            let first = iter.next().expect("nonempty");
            iter.fold(first, |acc, b| acc.disjoint(&b))
        }
        BordismDef::Reverse(n) => build_bordism(m, n, stack)?.reverse(),
    };
    stack.remove(name);
    Ok(b)
}
