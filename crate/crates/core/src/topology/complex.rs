//! Δ-complexes: ordered simplices glued along face maps.
//!
//! A `k`-simplex is stored by its `k + 1` faces; face `i` omits vertex `i`.
//! Identifications are allowed (a 1-vertex torus is fine), so vertex tuples
//! are derived from the face maps rather than the other way round.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::TopologyError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaComplex {
    dim: usize,
    vertex_count: usize,
    /// `faces[k - 1][s]`: face indices of `k`-simplex `s`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `vertices[k][s]`: ordered vertex tuple of `k`-simplex `s`.
    vertices: Vec<Vec<Vec<usize>>>,
    orientation: Option<Vec<i8>>,
    component_of_vertex: Vec<usize>,
    component_count: usize,
}

/// Explicit input forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "snake_case")]
pub enum ComplexInput {
    /// `faces[0]` lists edges as `[∂₀, ∂₁]` vertex ids, `faces[k-1]` lists
    /// `k`-simplices by their face indices in dimension `k - 1`.
    Delta {
        vertices: usize,
        faces: Vec<Vec<Vec<usize>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        orientation: Option<Vec<i8>>,
    },
    /// Top-dimensional simplices as vertex tuples; every face is generated
    /// and vertices are ordered by id.
    Simplicial {
        top: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        orientation: Option<Vec<i8>>,
    },
}

/// Deterministic summary produced by validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub dimension: usize,
    pub simplex_counts: Vec<usize>,
    pub euler_characteristic: i64,
    pub closed_pseudomanifold: bool,
    pub connected: bool,
    pub components: usize,
    pub orientable: bool,
    pub carries_orientation: bool,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller root so labels are deterministic.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

impl DeltaComplex {
    /// Validates face data and the closed pseudomanifold condition.
    pub fn from_faces(vertex_count: usize, faces: Vec<Vec<Vec<usize>>>) -> Result<Self, TopologyError> {
        let dim = faces.len();
        if dim == 0 {
            return Err(TopologyError::ZeroDimensional);
        }
        let mut vertices: Vec<Vec<Vec<usize>>> = vec![(0..vertex_count).map(|v| vec![v]).collect()];
        for k in 1..=dim {
            let below = if k == 1 { vertex_count } else { faces[k - 2].len() };
            let mut verts_k = Vec::with_capacity(faces[k - 1].len());
            for (s, f) in faces[k - 1].iter().enumerate() {
                if f.len() != k + 1 {
                    return Err(TopologyError::FaceArity { dim: k, simplex: s, got: f.len() });
                }
                if let Some(&bad) = f.iter().find(|&&x| x >= below) {
                    return Err(TopologyError::FaceOutOfRange { dim: k, simplex: s, face: bad });
                }
                if k >= 2 {
                    for j in 1..=k {
                        for i in 0..j {
                            let lhs = faces[k - 2][f[j]][i];
                            let rhs = faces[k - 2][f[i]][j - 1];
                            if lhs != rhs {
                                return Err(TopologyError::FaceIdentity { dim: k, simplex: s, i, j });
                            }
                        }
                    }
                }
                // Vertices of the face omitting the last vertex, then the last
                // vertex of the face omitting the first.
                let mut vs = vertices[k - 1][f[k]].clone();
                vs.push(*vertices[k - 1][f[0]].last().unwrap());
                verts_k.push(vs);
            }
            vertices.push(verts_k);
        }
        if faces[dim - 1].is_empty() {
            return Err(TopologyError::Empty);
        }

        // Every codimension-one simplex must occur in exactly two face slots.
        let ridge_count = if dim == 1 { vertex_count } else { faces[dim - 2].len() };
        let mut slots = vec![0usize; ridge_count];
        for f in &faces[dim - 1] {
            for &r in f {
                slots[r] += 1;
            }
        }
        if let Some((ridge, &count)) = slots.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(TopologyError::NotClosed { ridge, cofaces: count });
        }

        let mut uf = UnionFind::new(vertex_count);
        for e in vertices[1].iter() {
            uf.union(e[0], e[1]);
        }
        let mut labels = BTreeMap::new();
        let component_of_vertex: Vec<usize> = (0..vertex_count)
            .map(|v| {
                let r = uf.find(v);
                let next = labels.len();
                *labels.entry(r).or_insert(next)
            })
            .collect();
        let component_count = labels.len();
        Ok(Self { dim, vertex_count, faces, vertices, orientation: None, component_of_vertex, component_count })
    }

    /// Builds the complex generated by the given top simplices, ordering
    /// each simplex by vertex id.
    pub fn from_top_simplices(top: &[Vec<usize>]) -> Result<Self, TopologyError> {
        let Some(first) = top.first() else { return Err(TopologyError::Empty) };
        let dim = first.len().checked_sub(1).ok_or(TopologyError::Empty)?;
        if dim == 0 {
            return Err(TopologyError::ZeroDimensional);
        }
        let mut ids: Vec<usize> = top.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids.dedup();
        let relabel: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        // index[k] maps a sorted vertex tuple to its simplex index.
        let mut index: Vec<BTreeMap<Vec<usize>, usize>> = vec![BTreeMap::new(); dim + 1];
        let mut tops = Vec::with_capacity(top.len());
        for s in top {
            if s.len() != dim + 1 {
                return Err(TopologyError::MixedDimensions);
            }
            let mut t: Vec<usize> = s.iter().map(|v| relabel[v]).collect();
            t.sort_unstable();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(TopologyError::DegenerateSimplex(s.clone()));
            }
            tops.push(t);
        }
        // Collect all faces, lexicographically ordered within each dimension.
        let mut all: Vec<std::collections::BTreeSet<Vec<usize>>> = vec![Default::default(); dim + 1];
        for t in &tops {
            collect_subsets(t, &mut all);
        }
        for (k, set) in all.iter().enumerate() {
            for (i, s) in set.iter().enumerate() {
                index[k].insert(s.clone(), i);
            }
        }
        let mut faces = Vec::with_capacity(dim);
        for k in 1..=dim {
            let list: Vec<&Vec<usize>> = if k == dim { tops.iter().collect() } else { all[k].iter().collect() };
            let fk = list
                .iter()
                .map(|s| {
                    (0..=k)
                        .map(|omit| {
                            let face: Vec<usize> =
                                s.iter().enumerate().filter(|(j, _)| *j != omit).map(|(_, &v)| v).collect();
                            index[k - 1][&face]
                        })
                        .collect()
                })
                .collect();
            faces.push(fk);
        }
        Self::from_faces(ids.len(), faces)
    }

    pub fn from_input(input: &ComplexInput) -> Result<Self, TopologyError> {
        let (mut k, orientation) = match input {
            ComplexInput::Delta { vertices, faces, orientation } => (Self::from_faces(*vertices, faces.clone())?, orientation),
            ComplexInput::Simplicial { top, orientation } => (Self::from_top_simplices(top)?, orientation),
        };
        if let Some(o) = orientation {
            k = k.with_orientation(o.clone())?;
        }
        Ok(k)
    }

    pub fn to_input(&self) -> ComplexInput {
        ComplexInput::Delta {
            vertices: self.vertex_count,
            faces: self.faces.clone(),
            orientation: self.orientation.clone(),
        }
    }

    /// 1-vertex surface from a polygon word such as `abAB` (upper case is
    /// an inverse side). The polygon is fan-triangulated; apex and diagonal
    /// directions are searched so that every triangle has a consistent
    /// vertex order.
    pub fn from_polygon_word(word: &str) -> Result<Self, TopologyError> {
        let sides: Vec<(char, bool)> = word.chars().map(|c| (c.to_ascii_lowercase(), c.is_ascii_uppercase())).collect();
        let len = sides.len();
        let mut letters: Vec<char> = Vec::new();
        for &(c, _) in &sides {
            if !c.is_ascii_lowercase() {
                return Err(TopologyError::BadWord(word.to_string()));
            }
            if !letters.contains(&c) {
                letters.push(c);
            }
        }
        if len < 4 || letters.iter().any(|&c| sides.iter().filter(|s| s.0 == c).count() != 2) {
            return Err(TopologyError::BadWord(word.to_string()));
        }
        // Corner identification.
        let ends = |k: usize| -> (usize, usize) {
            let (a, b) = (k, (k + 1) % len);
            if sides[k].1 { (b, a) } else { (a, b) }
        };
        let mut uf = UnionFind::new(len);
        for &c in &letters {
            let occ: Vec<usize> = (0..len).filter(|&k| sides[k].0 == c).collect();
            let (t0, h0) = ends(occ[0]);
            let (t1, h1) = ends(occ[1]);
            uf.union(t0, t1);
            uf.union(h0, h1);
        }
        let mut labels = BTreeMap::new();
        let corner_vertex: Vec<usize> = (0..len)
            .map(|k| {
                let r = uf.find(k);
                let next = labels.len();
                *labels.entry(r).or_insert(next)
            })
            .collect();
        let vertex_count = labels.len();

        for apex in 0..len {
            let diag_count = len - 3;
            for bits in 0u64..(1u64 << diag_count) {
                if let Some(k) =
                    Self::try_fan(&sides, &letters, &corner_vertex, vertex_count, apex, bits, &ends)
                {
                    return Ok(k);
                }
            }
        }
        Err(TopologyError::BadWord(word.to_string()))
    }

    #[allow(clippy::too_many_arguments)]
    fn try_fan(
        sides: &[(char, bool)],
        letters: &[char],
        corner_vertex: &[usize],
        vertex_count: usize,
        apex: usize,
        bits: u64,
        ends: &dyn Fn(usize) -> (usize, usize),
    ) -> Option<Self> {
        let len = sides.len();
        let corner = |j: usize| (apex + j) % len;
        // Directed edges between corners: (tail corner, head corner, edge id).
        let mut edges: Vec<(usize, usize)> = Vec::new(); // (tail vertex, head vertex)
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for (id, &c) in letters.iter().enumerate() {
            let k = (0..len).find(|&k| sides[k].0 == c).unwrap();
            let (t, h) = ends(k);
            edges.push((corner_vertex[t], corner_vertex[h]));
            for k in (0..len).filter(|&k| sides[k].0 == c) {
                let (t, h) = ends(k);
                directed.insert((t, h), id);
            }
        }
        for j in 2..len - 1 {
            let (t, h) = if bits >> (j - 2) & 1 == 0 { (corner(0), corner(j)) } else { (corner(j), corner(0)) };
            directed.insert((t, h), edges.len());
            edges.push((corner_vertex[t], corner_vertex[h]));
        }
        let mut triangles = Vec::new();
        for j in 1..len - 1 {
            let cs = [corner(0), corner(j), corner(j + 1)];
            // Find an ordering x<y<z with every edge pointing forward.
            let mut found = None;
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let (x, y, z) = (cs[perm[0]], cs[perm[1]], cs[perm[2]]);
                if let (Some(&yz), Some(&xz), Some(&xy)) =
                    (directed.get(&(y, z)), directed.get(&(x, z)), directed.get(&(x, y)))
                {
                    found = Some(vec![yz, xz, xy]);
                    break;
                }
            }
            triangles.push(found?);
        }
        let edge_faces = edges.iter().map(|&(t, h)| vec![h, t]).collect();
        Self::from_faces(vertex_count, vec![edge_faces, triangles]).ok()
    }

    /// `Tⁿ` as the quotient of the standard cube triangulation: a
    /// `k`-simplex is an ordered sequence of `k` disjoint nonempty subsets
    /// of the coordinate axes, with a single vertex.
    pub fn torus_cube(n: usize) -> Result<Self, TopologyError> {
        if n == 0 || n > 4 {
            return Err(TopologyError::ZeroDimensional);
        }
        // simplices[k]: list of sequences of bitmasks.
        let mut simplices: Vec<Vec<Vec<u32>>> = vec![vec![vec![]]];
        for k in 1..=n {
            let mut next = Vec::new();
            for s in &simplices[k - 1] {
                let used: u32 = s.iter().fold(0, |a, &b| a | b);
                for m in 1u32..(1 << n) {
                    if m & used == 0 {
                        let mut t = s.clone();
                        t.push(m);
                        next.push(t);
                    }
                }
            }
            next.sort();
            simplices.push(next);
        }
        let index: Vec<HashMap<Vec<u32>, usize>> = simplices
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut faces = Vec::new();
        for k in 1..=n {
            let fk = simplices[k]
                .iter()
                .map(|s| {
                    (0..=k)
                        .map(|i| {
                            let face: Vec<u32> = if i == 0 {
                                s[1..].to_vec()
                            } else if i == k {
                                s[..k - 1].to_vec()
                            } else {
                                let mut f = s[..i - 1].to_vec();
                                f.push(s[i - 1] | s[i]);
                                f.extend_from_slice(&s[i + 1..]);
                                f
                            };
                            index[k - 1][&face]
                        })
                        .collect()
                })
                .collect();
            faces.push(fk);
        }
        Self::from_faces(1, faces)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn simplex_count(&self, k: usize) -> usize {
        if k == 0 {
            self.vertex_count
        } else if k <= self.dim {
            self.faces[k - 1].len()
        } else {
            0
        }
    }

    pub fn edge_count(&self) -> usize {
        self.simplex_count(1)
    }

    /// Face `i` of `k`-simplex `s`, as an index in dimension `k - 1`.
    #[inline]
    pub fn face(&self, k: usize, s: usize, i: usize) -> usize {
        self.faces[k - 1][s][i]
    }

    pub fn faces_of(&self, k: usize, s: usize) -> &[usize] {
        &self.faces[k - 1][s]
    }

    pub fn vertices_of(&self, k: usize, s: usize) -> &[usize] {
        &self.vertices[k][s]
    }

    /// Index of the sub-simplex of `k`-simplex `s` spanned by the vertex
    /// positions in `keep` (ascending).
    pub fn sub_simplex(&self, k: usize, s: usize, keep: &[usize]) -> usize {
        let mut cur = s;
        let mut dim = k;
        for pos in (0..=k).rev() {
            if !keep.contains(&pos) {
                cur = self.face(dim, cur, pos);
                dim -= 1;
            }
        }
        cur
    }

    /// Edge from vertex position `i` to `j > i` of `k`-simplex `s`.
    pub fn edge_of(&self, k: usize, s: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j <= k);
        self.sub_simplex(k, s, &[i, j])
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim).map(|k| if k % 2 == 0 { 1 } else { -1 } * self.simplex_count(k) as i64).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of_vertex(&self, v: usize) -> usize {
        self.component_of_vertex[v]
    }

    pub fn orientation(&self) -> Option<&[i8]> {
        self.orientation.as_deref()
    }

    /// Signs `ε` on top simplices with `∂(Σ ε σ) = 0` over `Z`, if any exist.
    pub fn find_orientation(&self) -> Option<Vec<i8>> {
        let n = self.dim;
        let tops = self.simplex_count(n);
        let mut slots: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.simplex_count(n - 1)];
        for s in 0..tops {
            for (i, &r) in self.faces_of(n, s).iter().enumerate() {
                slots[r].push((s, i));
            }
        }
        let mut sign = vec![0i8; tops];
        for start in 0..tops {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(s) = queue.pop_front() {
                for &r in self.faces_of(n, s) {
                    let [(s1, i1), (s2, i2)] = [slots[r][0], slots[r][1]];
                    // ε₁(−1)^{i₁} + ε₂(−1)^{i₂} = 0
                    let parity = if (i1 + i2) % 2 == 0 { -1 } else { 1 };
                    if s1 == s2 {
                        if parity != 1 {
                            return None;
                        }
                        continue;
                    }
                    let (known, other) = if sign[s1] != 0 { (s1, s2) } else { (s2, s1) };
                    let want = sign[known] * parity;
                    if sign[other] == 0 {
                        sign[other] = want;
                        queue.push_back(other);
                    } else if sign[other] != want {
                        return None;
                    }
                }
            }
        }
        Some(sign)
    }

    /// Attaches orientation signs after checking they form an integral cycle.
    pub fn with_orientation(mut self, signs: Vec<i8>) -> Result<Self, TopologyError> {
        let n = self.dim;
        if signs.len() != self.simplex_count(n) || signs.iter().any(|&e| e != 1 && e != -1) {
            return Err(TopologyError::BadOrientation("one sign ±1 per top simplex required".into()));
        }
        let mut boundary = vec![0i64; self.simplex_count(n - 1)];
        for (s, &e) in signs.iter().enumerate() {
            for (i, &r) in self.faces_of(n, s).iter().enumerate() {
                boundary[r] += e as i64 * if i % 2 == 0 { 1 } else { -1 };
            }
        }
        if let Some(r) = boundary.iter().position(|&b| b != 0) {
            return Err(TopologyError::BadOrientation(format!("integral boundary is nonzero on ridge {r}")));
        }
        self.orientation = Some(signs);
        Ok(self)
    }

    /// Attaches an orientation when one exists.
    pub fn oriented(self) -> Self {
        match self.find_orientation() {
            Some(o) => self.with_orientation(o).expect("orientation found by propagation"),
            None => self,
        }
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self, TopologyError> {
        if self.dim != other.dim {
            return Err(TopologyError::MixedDimensions);
        }
        let mut faces = self.faces.clone();
        for k in 1..=self.dim {
            let shift = other_shift(self, k - 1);
            faces[k - 1].extend(other.faces[k - 1].iter().map(|f| f.iter().map(|x| x + shift).collect::<Vec<_>>()));
        }
        let mut k = Self::from_faces(self.vertex_count + other.vertex_count, faces)?;
        if let (Some(a), Some(b)) = (&self.orientation, &other.orientation) {
            k = k.with_orientation(a.iter().chain(b).copied().collect())?;
        }
        Ok(k)
    }

    /// Connected components as standalone complexes, in order of their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Self> {
        if self.component_count == 1 {
            return vec![self.clone()];
        }
        (0..self.component_count)
            .map(|c| {
                // Renumber simplices of each dimension within the component.
                let mut maps: Vec<HashMap<usize, usize>> = Vec::new();
                let vmap: HashMap<usize, usize> = (0..self.vertex_count)
                    .filter(|&v| self.component_of_vertex[v] == c)
                    .enumerate()
                    .map(|(i, v)| (v, i))
                    .collect();
                let vcount = vmap.len();
                maps.push(vmap);
                let mut faces = Vec::new();
                let mut top_keep = Vec::new();
                for k in 1..=self.dim {
                    let keep: Vec<usize> = (0..self.simplex_count(k))
                        .filter(|&s| self.component_of_vertex[self.vertices[k][s][0]] == c)
                        .collect();
                    let fk = keep
                        .iter()
                        .map(|&s| self.faces[k - 1][s].iter().map(|f| maps[k - 1][f]).collect())
                        .collect();
                    faces.push(fk);
                    maps.push(keep.iter().enumerate().map(|(i, &s)| (s, i)).collect());
                    if k == self.dim {
                        top_keep = keep;
                    }
                }
                let mut comp = Self::from_faces(vcount, faces).expect("component of a valid complex");
                if let Some(o) = &self.orientation {
                    comp = comp
                        .with_orientation(top_keep.iter().map(|&s| o[s]).collect())
                        .expect("restriction of an orientation");
                }
                comp
            })
            .collect()
    }

    /// Tree edges of a BFS spanning forest of the 1-skeleton, rooted at the
    /// smallest vertex of each component.
    pub fn spanning_forest(&self) -> Vec<bool> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (e, vs) in self.vertices[1].iter().enumerate() {
            adj[vs[0]].push((vs[1], e));
            adj[vs[1]].push((vs[0], e));
        }
        let mut seen = vec![false; self.vertex_count];
        let mut tree = vec![false; self.edge_count()];
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        tree[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        tree
    }

    pub fn report(&self) -> ValidationReport {
        ValidationReport {
            dimension: self.dim,
            simplex_counts: (0..=self.dim).map(|k| self.simplex_count(k)).collect(),
            euler_characteristic: self.euler_characteristic(),
            closed_pseudomanifold: true,
            connected: self.is_connected(),
            components: self.component_count,
            orientable: self.find_orientation().is_some(),
            carries_orientation: self.orientation.is_some(),
        }
    }
}

fn other_shift(k: &DeltaComplex, dim: usize) -> usize {
    k.simplex_count(dim)
}

fn collect_subsets(t: &[usize], all: &mut [std::collections::BTreeSet<Vec<usize>>]) {
    let n = t.len();
    for mask in 1u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| t[i]).collect();
        all[s.len() - 1].insert(s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_surfaces_have_expected_counts() {
        for g in 1..=3usize {
            let word: String = (0..g)
                .flat_map(|i| {
                    let a = (b'a' + 2 * i as u8) as char;
                    let b = (b'a' + 2 * i as u8 + 1) as char;
                    [a, b, a.to_ascii_uppercase(), b.to_ascii_uppercase()]
                })
                .collect();
            let k = DeltaComplex::from_polygon_word(&word).unwrap();
            assert_eq!(k.vertex_count(), 1);
            assert_eq!(k.simplex_count(2), 4 * g - 2);
            assert_eq!(k.euler_characteristic(), 2 - 2 * g as i64);
            assert!(k.find_orientation().is_some());
        }
    }

    #[test]
    fn cube_tori() {
        let t2 = DeltaComplex::torus_cube(2).unwrap();
        assert_eq!((t2.simplex_count(1), t2.simplex_count(2)), (3, 2));
        let t3 = DeltaComplex::torus_cube(3).unwrap();
        assert_eq!((t3.simplex_count(1), t3.simplex_count(2), t3.simplex_count(3)), (7, 12, 6));
        assert_eq!(t3.euler_characteristic(), 0);
        assert!(t3.find_orientation().is_some());
    }

    #[test]
    fn face_identity_violation_is_reported() {
        // Two vertices, edge 0 from 0 to 1; a "triangle" whose faces disagree.
        let faces = vec![vec![vec![1, 0], vec![0, 0], vec![1, 1]], vec![vec![2, 1, 0], vec![2, 1, 0]]];
        let err = DeltaComplex::from_faces(2, faces).unwrap_err();
        assert!(matches!(err, TopologyError::FaceIdentity { .. }), "{err:?}");
    }

    #[test]
    fn open_complex_is_rejected() {
        let err = DeltaComplex::from_top_simplices(&[vec![0, 1, 2]]).unwrap_err();
        assert!(matches!(err, TopologyError::NotClosed { cofaces: 1, .. }));
    }

    #[test]
    fn bad_orientation_is_rejected() {
        let k = DeltaComplex::from_polygon_word("abAB").unwrap();
        assert!(k.clone().with_orientation(vec![1, 1]).is_err());
        assert!(k.with_orientation(vec![1, -1]).is_ok());
    }

    #[test]
    fn components_split_and_keep_orientation() {
        let t = DeltaComplex::torus_cube(2).unwrap().oriented();
        let u = t.disjoint_union(&t).unwrap();
        assert_eq!(u.component_count(), 2);
        let parts = u.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], t);
        assert!(parts[1].orientation().is_some());
    }

    #[test]
    fn json_input_round_trip() {
        let k = DeltaComplex::from_polygon_word("abAB").unwrap().oriented();
        let json = serde_json::to_string(&k.to_input()).unwrap();
        let back: ComplexInput = serde_json::from_str(&json).unwrap();
        assert_eq!(DeltaComplex::from_input(&back).unwrap(), k);
    }
}
