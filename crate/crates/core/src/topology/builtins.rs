//! Named manifolds with deterministic triangulations and standard
//! presentations of their fundamental groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{DeltaComplex, TopologyError};
use crate::fields::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Builtin {
    /// Three vertices, three edges.
    Circle,
    /// Boundary of a tetrahedron.
    Sphere2,
    /// Boundary of a 4-simplex.
    Sphere3,
    /// One vertex, two triangles.
    Torus,
    /// 3 × 3 simplicial grid, 18 triangles.
    TorusGrid,
    /// One vertex, six tetrahedra.
    Torus3,
    Klein,
    Rp2,
    /// Orientable surface of genus `g ≤ 3`.
    Sigma(usize),
    DisjointUnion(Vec<Builtin>),
}

pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "circle",
        "sphere2",
        "sphere3",
        "torus",
        "torus_grid",
        "torus3",
        "klein",
        "rp2",
        "sigma(0)",
        "sigma(1)",
        "sigma(2)",
        "sigma(3)",
        "disjoint_union(<name>,<name>,...)",
    ]
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Circle => f.write_str("circle"),
            Builtin::Sphere2 => f.write_str("sphere2"),
            Builtin::Sphere3 => f.write_str("sphere3"),
            Builtin::Torus => f.write_str("torus"),
            Builtin::TorusGrid => f.write_str("torus_grid"),
            Builtin::Torus3 => f.write_str("torus3"),
            Builtin::Klein => f.write_str("klein"),
            Builtin::Rp2 => f.write_str("rp2"),
            Builtin::Sigma(g) => write!(f, "sigma({g})"),
            Builtin::DisjointUnion(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "disjoint_union({})", names.join(","))
            }
        }
    }
}

/// Splits `a,b(c,d),e` at top-level commas.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

impl FromStr for Builtin {
    type Err = TopologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || TopologyError::UnknownBuiltin(s.to_string());
        let s = s.trim();
        Ok(match s {
            "circle" => Builtin::Circle,
            "sphere2" => Builtin::Sphere2,
            "sphere3" => Builtin::Sphere3,
            "torus" => Builtin::Torus,
            "torus_grid" => Builtin::TorusGrid,
            "torus3" => Builtin::Torus3,
            "klein" => Builtin::Klein,
            "rp2" => Builtin::Rp2,
            _ => {
                if let Some(inner) = s.strip_prefix("sigma(").and_then(|r| r.strip_suffix(')')) {
                    let g: usize = inner.trim().parse().map_err(|_| unknown())?;
                    if g > 3 {
                        return Err(unknown());
                    }
                    Builtin::Sigma(g)
                } else if let Some(inner) = s.strip_prefix("disjoint_union(").and_then(|r| r.strip_suffix(')')) {
                    let parts = split_top_level(inner).into_iter().map(Builtin::from_str).collect::<Result<Vec<_>, _>>()?;
                    if parts.is_empty() {
                        return Err(unknown());
                    }
                    Builtin::DisjointUnion(parts)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

impl TryFrom<String> for Builtin {
    type Error = TopologyError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Builtin> for String {
    fn from(b: Builtin) -> String {
        b.to_string()
    }
}

fn genus_word(g: usize) -> String {
    (0..g)
        .flat_map(|i| {
            let a = (b'a' + 2 * i as u8) as char;
            let b = (b'a' + 2 * i as u8 + 1) as char;
            [a, b, a.to_ascii_uppercase(), b.to_ascii_uppercase()]
        })
        .collect()
}

fn boundary_of_simplex(n: usize) -> Vec<Vec<usize>> {
    (0..=n + 1).map(|omit| (0..=n + 1).filter(|&v| v != omit).collect()).collect()
}

fn torus_grid() -> Vec<Vec<usize>> {
    let id = |i: usize, j: usize| 3 * (i % 3) + j % 3;
    let mut top = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            top.push(vec![id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            top.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
        }
    }
    top
}

/// Two vertices `P, Q`; edges `a, b: P → Q` and a loop `d` at `Q`;
/// triangles `(a, d, b)` and `(b, d, a)` as (01, 12, 02) edges.
fn rp2() -> Result<DeltaComplex, TopologyError> {
    let edges = vec![vec![1, 0], vec![1, 0], vec![1, 1]];
    let triangles = vec![vec![2, 1, 0], vec![2, 0, 1]];
    DeltaComplex::from_faces(2, vec![edges, triangles])
}

/// Triangulation of a builtin, oriented whenever the manifold is.
pub fn builtin_complex(b: &Builtin) -> Result<DeltaComplex, TopologyError> {
    let k = match b {
        Builtin::Circle => DeltaComplex::from_top_simplices(&[vec![0, 1], vec![1, 2], vec![0, 2]])?,
        Builtin::Sphere2 | Builtin::Sigma(0) => DeltaComplex::from_top_simplices(&boundary_of_simplex(2))?,
        Builtin::Sphere3 => DeltaComplex::from_top_simplices(&boundary_of_simplex(3))?,
        Builtin::Torus => DeltaComplex::from_polygon_word("abAB")?,
        Builtin::TorusGrid => DeltaComplex::from_top_simplices(&torus_grid())?,
        Builtin::Torus3 => DeltaComplex::torus_cube(3)?,
        Builtin::Klein => DeltaComplex::from_polygon_word("abAb")?,
        Builtin::Rp2 => rp2()?,
        Builtin::Sigma(g) => DeltaComplex::from_polygon_word(&genus_word(*g))?,
        Builtin::DisjointUnion(parts) => {
            let mut iter = parts.iter();
            let first = builtin_complex(iter.next().ok_or(TopologyError::Empty)?)?;
            return iter.try_fold(first, |acc, p| acc.disjoint_union(&builtin_complex(p)?));
        }
    };
    Ok(k.oriented())
}

/// Standard presentation of `π₁`, written independently of the triangulation.
pub fn builtin_presentation(b: &Builtin) -> Presentation {
    let p = |n: usize, rels: &[&str]| Presentation::parse(n, rels).expect("static presentation");
    match b {
        Builtin::Circle => p(1, &[]),
        Builtin::Sphere2 | Builtin::Sphere3 | Builtin::Sigma(0) => Presentation::trivial(),
        Builtin::Torus | Builtin::TorusGrid => p(2, &["abAB"]),
        Builtin::Torus3 => p(3, &["abAB", "acAC", "bcBC"]),
        Builtin::Klein => p(2, &["abAb"]),
        Builtin::Rp2 => p(1, &["aa"]),
        Builtin::Sigma(g) => Presentation::surface(*g),
        Builtin::DisjointUnion(parts) => {
            parts.iter().fold(Presentation::empty(), |acc, part| acc.disjoint_union(&builtin_presentation(part)))
        }
    }
}
