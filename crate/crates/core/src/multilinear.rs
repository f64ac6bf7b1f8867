//! Labelled bases, sparse multilinear maps and shuffle permutations.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, zero_vec, Mat, Rat};

/// A finite-dimensional space with a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    labels: Vec<String>,
}

impl Space {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::usage(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(Space { labels })
    }

    /// Basis `e0, e1, ...`.
    pub fn standard(dim: usize) -> Self {
        Self::with_prefix("e", dim)
    }

    pub fn with_prefix(prefix: &str, dim: usize) -> Self {
        Space { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn from_labels(labels: &[&str]) -> Result<Self> {
        Self::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `g ⊗ g` with the lexicographic pair basis: index `a * dim + b` is `e_a ⊗ e_b`.
    pub fn tensor_square(&self) -> Space {
        let mut labels = Vec::with_capacity(self.dim() * self.dim());
        for a in &self.labels {
            for b in &self.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Space { labels }
    }

    /// Direct sum with disjoint labels (`self` first).
    pub fn direct_sum(&self, other: &Space) -> Result<Space> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Space::new(labels)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = zero_vec(self.dim());
        v[i] = Rat::one();
        v
    }

    /// Renders a vector as `2*e + -1/2*f`, or `0`.
    pub fn format_vector(&self, v: &[Rat]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.labels[i].clone() } else { format!("{c}*{}", self.labels[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// An `(i, j)`-shuffle as a 0-based one-line permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub perm: Vec<usize>,
    pub sign: i8,
}

impl Shuffle {
    pub fn sign_rat(&self) -> Rat {
        Rat::from_int(self.sign as i64)
    }
}

/// All `(i, j)`-shuffles in lexicographic order of their one-line notation.
///
/// `perm[..i]` and `perm[i..]` are increasing; the sign is the parity of the
/// inversion count.
pub fn shuffles(i: usize, j: usize) -> Vec<Shuffle> {
    let n = i + j;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    choose(0, n, i, &mut chosen, &mut |first: &[usize]| {
        let mut perm = first.to_vec();
        perm.extend((0..n).filter(|x| !first.contains(x)));
        // inversions: pairs (a in first block, b in second block) with a > b
        let inv: usize = first.iter().enumerate().map(|(pos, &a)| a - pos).sum();
        out.push(Shuffle { perm, sign: if inv % 2 == 0 { 1 } else { -1 } });
    });
    out
}

fn choose(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    let need = k - acc.len();
    for x in start..=n - need {
        acc.push(x);
        choose(x + 1, n, k, acc, f);
        acc.pop();
    }
}

/// Number of inversions of a permutation in one-line notation.
pub fn inversions(perm: &[usize]) -> usize {
    let mut c = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                c += 1;
            }
        }
    }
    c
}

/// Iterates over all index tuples of a product of basis sets, last slot fastest.
#[derive(Clone, Debug)]
pub struct Tuples {
    dims: Vec<usize>,
    cur: Vec<usize>,
    done: bool,
}

impl Tuples {
    pub fn new(dims: &[usize]) -> Self {
        Tuples { dims: dims.to_vec(), cur: vec![0; dims.len()], done: dims.iter().any(|&d| d == 0) }
    }

    pub fn uniform(dim: usize, arity: usize) -> Self {
        Self::new(&vec![dim; arity])
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.cur.clone();
        let mut k = self.dims.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.cur[k] += 1;
            if self.cur[k] < self.dims[k] {
                break;
            }
            self.cur[k] = 0;
        }
        Some(item)
    }
}

/// One argument of [`MultiMap::eval`].
#[derive(Clone, Copy, Debug)]
pub enum Arg<'a> {
    Basis(usize),
    Vector(&'a [Rat]),
}

/// A multilinear map `U_1 ⊗ ... ⊗ U_k → W` stored as a sparse table from
/// basis tuples to coefficient vectors. Zero values are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiMap {
    dims: Vec<usize>,
    codim: usize,
    strides: Vec<usize>,
    table: HashMap<usize, Vec<Rat>>,
}

impl MultiMap {
    pub fn zero(dims: Vec<usize>, codim: usize) -> Self {
        let mut strides = vec![1; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        MultiMap { dims, codim, strides, table: HashMap::new() }
    }

    /// `arity` copies of a `dim`-dimensional space into a `codim`-dimensional one.
    pub fn uniform(dim: usize, arity: usize, codim: usize) -> Self {
        Self::zero(vec![dim; arity], codim)
    }

    /// Tabulates `f` on every basis tuple.
    pub fn from_fn(dims: Vec<usize>, codim: usize, mut f: impl FnMut(&[usize]) -> Vec<Rat>) -> Self {
        let mut m = Self::zero(dims, codim);
        for t in Tuples::new(&m.dims) {
            let v = f(&t);
            debug_assert_eq!(v.len(), codim);
            m.set(&t, v);
        }
        m
    }

    /// Linear map given by a `codim × dim` matrix.
    pub fn from_matrix(m: &Mat) -> Self {
        Self::from_fn(vec![m.cols()], m.rows(), |t| m.column(t[0]))
    }

    /// Inverse of [`MultiMap::from_matrix`] for arity-1 maps.
    pub fn to_matrix(&self) -> Mat {
        assert_eq!(self.arity(), 1, "to_matrix needs a linear map");
        let cols: Vec<Vec<Rat>> = (0..self.dims[0]).map(|i| self.value(&[i])).collect();
        Mat::from_columns(self.codim, &cols)
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn num_tuples(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn same_shape(&self, other: &MultiMap) -> bool {
        self.dims == other.dims && self.codim == other.codim
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.table.len()
    }

    fn linear(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    fn delinear(&self, mut lin: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let i = lin / s;
                lin %= s;
                i
            })
            .collect()
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.arity() {
            return Err(Error::usage(format!(
                "index tuple of length {} for a map of arity {}",
                idx.len(),
                self.arity()
            )));
        }
        for (k, (&i, &d)) in idx.iter().zip(&self.dims).enumerate() {
            if i >= d {
                return Err(Error::usage(format!("index {i} in slot {k} out of range (dim {d})")));
            }
        }
        Ok(())
    }

    /// Stored value on a basis tuple; `None` means zero.
    pub fn get(&self, idx: &[usize]) -> Option<&[Rat]> {
        debug_assert!(self.check_index(idx).is_ok());
        self.table.get(&self.linear(idx)).map(Vec::as_slice)
    }

    /// Value on a basis tuple as a dense vector.
    pub fn value(&self, idx: &[usize]) -> Vec<Rat> {
        self.get(idx).map_or_else(|| zero_vec(self.codim), <[Rat]>::to_vec)
    }

    pub fn set(&mut self, idx: &[usize], v: Vec<Rat>) {
        assert!(self.check_index(idx).is_ok(), "index out of range");
        assert_eq!(v.len(), self.codim, "value has wrong length");
        let key = self.linear(idx);
        if is_zero_vec(&v) {
            self.table.remove(&key);
        } else {
            self.table.insert(key, v);
        }
    }

    pub fn try_set(&mut self, idx: &[usize], v: Vec<Rat>) -> Result<()> {
        self.check_index(idx)?;
        if v.len() != self.codim {
            return Err(Error::usage(format!("value of length {} for codomain of dim {}", v.len(), self.codim)));
        }
        self.set(idx, v);
        Ok(())
    }

    /// `self[idx] += c * v`.
    pub fn add_scaled(&mut self, idx: &[usize], c: &Rat, v: &[Rat]) {
        if c.is_zero() || is_zero_vec(v) {
            return;
        }
        let key = self.linear(idx);
        let codim = self.codim;
        let entry = self.table.entry(key).or_insert_with(|| zero_vec(codim));
        axpy(entry, c, v);
        if is_zero_vec(entry) {
            self.table.remove(&key);
        }
    }

    /// Stored entries sorted by index tuple.
    pub fn entries(&self) -> Vec<(Vec<usize>, &[Rat])> {
        let mut keys: Vec<&usize> = self.table.keys().collect();
        keys.sort_unstable();
        keys.into_iter().map(|k| (self.delinear(*k), self.table[k].as_slice())).collect()
    }

    /// Multilinear evaluation on basis indices and/or coefficient vectors.
    pub fn eval(&self, args: &[Arg<'_>]) -> Result<Vec<Rat>> {
        if args.len() != self.arity() {
            return Err(Error::usage(format!("{} arguments for a map of arity {}", args.len(), self.arity())));
        }
        for (k, (a, &d)) in args.iter().zip(&self.dims).enumerate() {
            match a {
                Arg::Basis(i) if *i >= d => {
                    return Err(Error::usage(format!("basis index {i} in slot {k} out of range (dim {d})")))
                }
                Arg::Vector(v) if v.len() != d => {
                    return Err(Error::usage(format!("vector of length {} in slot {k}, expected {d}", v.len())))
                }
                _ => {}
            }
        }
        let mut out = zero_vec(self.codim);
        // choose the cheaper of: expanding the arguments, or scanning the table
        let expansion: usize = args
            .iter()
            .map(|a| match a {
                Arg::Basis(_) => 1,
                Arg::Vector(v) => v.iter().filter(|c| !c.is_zero()).count(),
            })
            .product();
        if expansion <= self.table.len() {
            let mut idx = vec![0; args.len()];
            self.expand(args, 0, &Rat::one(), &mut idx, &mut out);
        } else {
            for (&key, val) in &self.table {
                let idx = self.delinear(key);
                let mut c = Rat::one();
                for (a, &i) in args.iter().zip(&idx) {
                    match a {
                        Arg::Basis(j) if *j != i => {
                            c = Rat::zero();
                            break;
                        }
                        Arg::Basis(_) => {}
                        Arg::Vector(v) => {
                            if v[i].is_zero() {
                                c = Rat::zero();
                                break;
                            }
                            c = &c * &v[i];
                        }
                    }
                }
                axpy(&mut out, &c, val);
            }
        }
        Ok(out)
    }

    fn expand(&self, args: &[Arg<'_>], k: usize, coef: &Rat, idx: &mut Vec<usize>, out: &mut [Rat]) {
        if k == args.len() {
            if let Some(v) = self.get(idx) {
                axpy(out, coef, v);
            }
            return;
        }
        match args[k] {
            Arg::Basis(i) => {
                idx[k] = i;
                self.expand(args, k + 1, coef, idx, out);
            }
            Arg::Vector(v) => {
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    idx[k] = i;
                    self.expand(args, k + 1, &(coef * c), idx, out);
                }
            }
        }
    }

    /// Adds `scale * self(idx with slot replaced by v)` into `out`; the hot
    /// path for bracket compositions that feed one vector into one slot.
    pub fn accumulate_slot(&self, idx: &mut [usize], slot: usize, v: &[Rat], scale: &Rat, out: &mut [Rat]) {
        let saved = idx[slot];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx[slot] = i;
            if let Some(val) = self.get(idx) {
                axpy(out, &(scale * c), val);
            }
        }
        idx[slot] = saved;
    }

    /// Adds `scale * self(idx)` into `out`.
    pub fn accumulate(&self, idx: &[usize], scale: &Rat, out: &mut [Rat]) {
        if let Some(val) = self.get(idx) {
            axpy(out, scale, val);
        }
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        self.combine(other, &Rat::one())
    }

    pub fn sub(&self, other: &MultiMap) -> Result<MultiMap> {
        self.combine(other, &Rat::from_int(-1))
    }

    /// `self + c * other`.
    pub fn combine(&self, other: &MultiMap, c: &Rat) -> Result<MultiMap> {
        if !self.same_shape(other) {
            return Err(Error::usage("adding multilinear maps of different shapes"));
        }
        let mut out = self.clone();
        for (&k, v) in &other.table {
            let idx = other.delinear(k);
            out.add_scaled(&idx, c, v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MultiMap {
        if c.is_zero() {
            return MultiMap::zero(self.dims.clone(), self.codim);
        }
        let mut out = self.clone();
        for v in out.table.values_mut() {
            for x in v.iter_mut() {
                *x = c * &*x;
            }
        }
        out
    }

    /// Applies a linear map (`new_codim × codim` matrix) to every value.
    pub fn map_values(&self, m: &Mat) -> MultiMap {
        assert_eq!(m.cols(), self.codim);
        let mut out = MultiMap::zero(self.dims.clone(), m.rows());
        for (&k, v) in &self.table {
            let w = m.mul_vec(v);
            if !is_zero_vec(&w) {
                out.table.insert(k, w);
            }
        }
        out
    }

    /// Dense coordinates over the elementary basis, tuple-major.
    pub fn to_coords(&self) -> Vec<Rat> {
        let mut out = zero_vec(self.num_tuples() * self.codim);
        for (&k, v) in &self.table {
            for (c, x) in v.iter().enumerate() {
                out[k * self.codim + c] = x.clone();
            }
        }
        out
    }

    pub fn from_coords(dims: Vec<usize>, codim: usize, coords: &[Rat]) -> Result<MultiMap> {
        let mut m = MultiMap::zero(dims, codim);
        if coords.len() != m.num_tuples() * codim {
            return Err(Error::usage("coordinate vector has the wrong length"));
        }
        for k in 0..m.num_tuples() {
            let v = coords[k * codim..(k + 1) * codim].to_vec();
            if !is_zero_vec(&v) {
                m.table.insert(k, v);
            }
        }
        Ok(m)
    }

    /// Position of `(idx, component)` in [`MultiMap::to_coords`].
    pub fn coord_index(&self, idx: &[usize], component: usize) -> usize {
        self.linear(idx) * self.codim + component
    }
}

/// Dimension of `Hom(U_1 ⊗ ... ⊗ U_k, W)` and its elementary basis; each basis
/// map sends one tuple to one basis vector of `W`, ordered as in
/// [`MultiMap::to_coords`].
pub fn map_space_dim(domains: &[usize], codim: usize) -> (usize, Vec<MultiMap>) {
    let mut basis = Vec::new();
    for t in Tuples::new(domains) {
        for c in 0..codim {
            let mut m = MultiMap::zero(domains.to_vec(), codim);
            let mut v = zero_vec(codim);
            v[c] = Rat::one();
            m.set(&t, v);
            basis.push(m);
        }
    }
    (basis.len(), basis)
}
