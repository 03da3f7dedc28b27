//! Dense linear algebra over `Z/p^e`.
//!
//! `Z/p^e` is a local principal ideal ring: every nonzero element is a unit
//! times `p^v`, and an entry of minimal valuation divides every other entry.
//! That makes Smith normal form a plain pivoting elimination.

pub(crate) type Mat = Vec<Vec<u64>>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Self {
        Self { p, e, q: p.pow(e) }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.q as u128) as u64
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a % self.q) % self.q
    }

    /// `p`-adic valuation of a residue; `e` for zero.
    pub fn valuation(&self, mut a: u64) -> u32 {
        a %= self.q;
        if a == 0 {
            return self.e;
        }
        let mut v = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }

    pub fn unit_inverse(&self, a: u64) -> u64 {
        let (g, x, _) = ext_gcd(a as i128, self.q as i128);
        debug_assert_eq!(g, 1, "not a unit");
        x.rem_euclid(self.q as i128) as u64
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Factorization of `n` into prime powers, ascending.
pub(crate) fn prime_powers(mut n: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push(PrimePower::new(p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push(PrimePower::new(n, 1));
    }
    out
}

/// `P · A · Q = diag(p^{v_0}, …, p^{v_{rank-1}}, 0, …)`.
pub(crate) struct Smith {
    /// Valuations of the nonzero diagonal entries, nondecreasing.
    pub valuations: Vec<u32>,
    pub p: Mat,
    #[cfg_attr(not(test), allow(dead_code))]
    pub p_inv: Mat,
    pub q: Mat,
    pub q_inv: Mat,
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect()
}

pub(crate) fn smith(ring: &PrimePower, a: &Mat, rows: usize, cols: usize) -> Smith {
    let mut a: Mat = a.iter().map(|r| r.iter().map(|x| x % ring.q).collect()).collect();
    let mut p = identity(rows);
    let mut p_inv = identity(rows);
    let mut q = identity(cols);
    let mut q_inv = identity(cols);
    let mut valuations = Vec::new();

    for k in 0..rows.min(cols) {
        // Pivot of minimal valuation in the trailing block.
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for (i, row) in a.iter().enumerate().skip(k) {
            for (j, &x) in row.iter().enumerate().skip(k) {
                if x != 0 {
                    let v = ring.valuation(x);
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((v, pi, pj)) = best else { break };

        // Move pivot to (k, k).
        if pi != k {
            a.swap(pi, k);
            p.swap(pi, k);
            for row in p_inv.iter_mut() {
                row.swap(pi, k);
            }
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            for row in q.iter_mut() {
                row.swap(pj, k);
            }
            q_inv.swap(pj, k);
        }

        // Normalize pivot to p^v by scaling row k with a unit.
        let pv = ring.p.pow(v);
        let unit = a[k][k] / pv;
        if unit != 1 {
            let u_inv = ring.unit_inverse(unit);
            for x in a[k].iter_mut() {
                *x = ring.mul(*x, u_inv);
            }
            for x in p[k].iter_mut() {
                *x = ring.mul(*x, u_inv);
            }
            for row in p_inv.iter_mut() {
                row[k] = ring.mul(row[k], unit);
            }
        }

        // Clear column k.
        for i in 0..rows {
            if i == k || a[i][k] == 0 {
                continue;
            }
            let f = a[i][k] / pv; // exact: valuation of a[i][k] ≥ v
            let nf = ring.neg(f);
            for j in 0..cols {
                a[i][j] = ring.add(a[i][j], ring.mul(nf, a[k][j]));
            }
            for j in 0..rows {
                p[i][j] = ring.add(p[i][j], ring.mul(nf, p[k][j]));
            }
            // P⁻¹ ← P⁻¹ · E⁻¹, where E adds f·row k to row i.
            for row in p_inv.iter_mut() {
                row[k] = ring.add(row[k], ring.mul(f, row[i]));
            }
        }
        // Clear row k.
        for j in 0..cols {
            if j == k || a[k][j] == 0 {
                continue;
            }
            let f = a[k][j] / pv;
            let nf = ring.neg(f);
            for row in a.iter_mut() {
                row[j] = ring.add(row[j], ring.mul(nf, row[k]));
            }
            for row in q.iter_mut() {
                row[j] = ring.add(row[j], ring.mul(nf, row[k]));
            }
            // Q⁻¹ ← E⁻¹ · Q⁻¹, where E adds -f·col k to col j.
            for c in 0..cols {
                let t = ring.mul(f, q_inv[j][c]);
                q_inv[k][c] = ring.add(q_inv[k][c], t);
            }
        }
        valuations.push(v);
    }
    Smith { valuations, p, p_inv, q, q_inv }
}

pub(crate) fn mat_vec(ring: &PrimePower, m: &Mat, x: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(x).fold(0, |acc, (&a, &b)| ring.add(acc, ring.mul(a, b))))
        .collect()
}

/// Submodule kernel and cohomology presentation for `C_prev --A--> C --B--> C_next`
/// over `Z/p^e`, where `A` is `k × j` and `B` is `r × k`.
pub(crate) struct Homology {
    ring: PrimePower,
    /// Smith data of `B`.
    b: Smith,
    /// Per kernel generator: the exponent `e - v` used to embed it in
    /// the `y = Q⁻¹ x` coordinates.
    gen_shift: Vec<u32>,
    /// Smith data of the relation matrix of `ker B / im A`.
    rel: Smith,
    /// Sizes `p^{t_i}` of the cyclic summands (trivial summands removed).
    pub orders: Vec<u64>,
    /// Indices into the relation-basis rows that carry nontrivial summands.
    summands: Vec<usize>,
    k: usize,
}

impl Homology {
    pub fn new(ring: PrimePower, a: &Mat, a_cols: usize, b: &Mat, b_rows: usize, k: usize) -> Self {
        let bs = smith(&ring, b, b_rows, k);
        let rank = bs.valuations.len();
        // Kernel generators in y-coordinates: y_i = p^{e - v_i} for i < rank,
        // y_i free otherwise. Generator i has order p^{v_i} (or p^e when free).
        let gen_shift: Vec<u32> = (0..k)
            .map(|i| if i < rank { ring.e - bs.valuations[i] } else { 0 })
            .collect();
        let gen_order_exp: Vec<u32> = (0..k).map(|i| ring.e - gen_shift[i]).collect();

        // Relations: p^{order_i} e_i, and every column of A rewritten in
        // kernel-generator coordinates.
        let mut rel: Mat = vec![Vec::new(); k];
        for i in 0..k {
            for (r, row) in rel.iter_mut().enumerate() {
                row.push(if r == i { ring.p.pow(gen_order_exp[i]) % ring.q } else { 0 });
            }
        }
        for c in 0..a_cols {
            let col: Vec<u64> = (0..k).map(|r| a[r][c]).collect();
            let y = mat_vec(&ring, &bs.q_inv, &col);
            for (i, row) in rel.iter_mut().enumerate() {
                let shift = ring.p.pow(gen_shift[i]);
                debug_assert_eq!(y[i] % shift, 0, "image not inside the kernel");
                row.push((y[i] / shift) % ring.p.pow(gen_order_exp[i]));
            }
        }
        let rel_cols = k + a_cols;
        let rs = smith(&ring, &rel, k, rel_cols);
        let mut orders = Vec::new();
        let mut summands = Vec::new();
        for i in 0..k {
            let t = rs.valuations.get(i).copied().unwrap_or(ring.e);
            if t > 0 {
                orders.push(ring.p.pow(t));
                summands.push(i);
            }
        }
        Self { ring, b: bs, gen_shift, rel: rs, orders, summands, k }
    }

    /// Coordinates of the class of a cocycle `x` in `⊕ Z/orders[i]`.
    pub fn class_of(&self, x: &[u64]) -> Vec<u64> {
        let ring = &self.ring;
        let y = mat_vec(ring, &self.b.q_inv, x);
        let c: Vec<u64> = (0..self.k)
            .map(|i| {
                let shift = ring.p.pow(self.gen_shift[i]);
                debug_assert_eq!(y[i] % shift, 0, "not a cocycle");
                y[i] / shift
            })
            .collect();
        let z = mat_vec(ring, &self.rel.p, &c);
        self.summands.iter().zip(&self.orders).map(|(&i, &o)| z[i] % o).collect()
    }

    /// Generators of the cocycle module, as vectors in `C`.
    pub fn cocycle_generators(&self) -> Vec<Vec<u64>> {
        let ring = &self.ring;
        (0..self.k)
            .filter(|&i| self.gen_shift[i] < ring.e)
            .map(|i| {
                let mut y = vec![0; self.k];
                y[i] = ring.p.pow(self.gen_shift[i]) % ring.q;
                mat_vec(ring, &self.b.q, &y)
            })
            .collect()
    }

    /// Total number of classes.
    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }
}
