//! Graded Lie brackets controlling Leibniz, Nambu and Lie triple system
//! structures: the Balavoine bracket on `Hom(⊗^{n+1} g, g)`, the bracket on
//! `Hom(⊗^{2p+1} g, g)` obtained through the embedding `Φ`, and Maurer-Cartan
//! checks.

use rand::Rng;

use crate::algebras::{Algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, rat, zero_vec, Rat};
use crate::multilinear::{shuffles, MultiMap, Shuffle, Tuples};

/// An element of `Hom(⊗^{n+1} g, g)` of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CLCochain {
    pub degree: usize,
    pub map: MultiMap,
}

/// An element of `Hom(⊗^{2p+1} g, g)` of degree `p`. Arguments come in pairs
/// `(x_i, y_i)` standing for `x_i ⊗ y_i`, followed by one last vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCochain {
    pub degree: usize,
    pub map: MultiMap,
}

fn check_endo(map: &MultiMap, arity: usize) -> Result<usize> {
    if map.arity() != arity {
        return Err(Error::usage(format!("expected arity {arity}, got {}", map.arity())));
    }
    let d = map.codim();
    if map.dims().iter().any(|&x| x != d) {
        return Err(Error::usage("cochain must map copies of one space into itself"));
    }
    Ok(d)
}

impl CLCochain {
    pub fn new(degree: usize, map: MultiMap) -> Result<Self> {
        check_endo(&map, degree + 1)?;
        Ok(CLCochain { degree, map })
    }

    pub fn zero(dim: usize, degree: usize) -> Self {
        CLCochain { degree, map: MultiMap::uniform(dim, degree + 1, dim) }
    }

    pub fn dim(&self) -> usize {
        self.map.codim()
    }

    pub fn random(dim: usize, degree: usize, rng: &mut impl Rng) -> Self {
        CLCochain { degree, map: random_map(dim, degree + 1, dim, rng) }
    }
}

impl CCochain {
    pub fn new(degree: usize, map: MultiMap) -> Result<Self> {
        check_endo(&map, 2 * degree + 1)?;
        Ok(CCochain { degree, map })
    }

    pub fn zero(dim: usize, degree: usize) -> Self {
        CCochain { degree, map: MultiMap::uniform(dim, 2 * degree + 1, dim) }
    }

    /// The bracket of a ternary algebra as a degree-1 element.
    pub fn from_algebra(a: &Algebra) -> Result<Self> {
        if !a.kind.is_ternary() {
            return Err(Error::usage(format!("a {} algebra has no ternary bracket", a.kind)));
        }
        CCochain::new(1, a.structure.clone())
    }

    pub fn dim(&self) -> usize {
        self.map.codim()
    }

    pub fn random(dim: usize, degree: usize, rng: &mut impl Rng) -> Self {
        CCochain { degree, map: random_map(dim, 2 * degree + 1, dim, rng) }
    }
}

/// Sparse random map with small integer values.
pub fn random_map(dim: usize, arity: usize, codim: usize, rng: &mut impl Rng) -> MultiMap {
    MultiMap::from_fn(vec![dim; arity], codim, |_| {
        (0..codim).map(|_| if rng.gen_bool(0.5) { Rat::zero() } else { rat(rng.gen_range(-2..=2)) }).collect()
    })
}

fn sign_pow(k: usize) -> Rat {
    Rat::sign(k)
}

/// `P ∘̄ Q = Σ_k P ∘_k Q`, where `∘_k` already carries the sign `(−1)^{(k−1)q}`.
fn circ_bar(p: &CLCochain, q: &CLCochain) -> MultiMap {
    let (pd, qd) = (p.degree, q.degree);
    let d = p.dim();
    let n = pd + qd + 1;
    let blocks: Vec<(usize, Vec<Shuffle>)> = (1..=pd + 1).map(|k| (k, shuffles(k - 1, qd))).collect();
    MultiMap::from_fn(vec![d; n], d, |t| {
        let mut out = zero_vec(d);
        let mut pidx = vec![0; pd + 1];
        let mut qidx = vec![0; qd + 1];
        for (k, shs) in &blocks {
            let k = *k;
            let outer = sign_pow((k - 1) * qd);
            for sh in shs {
                for (s, slot) in qidx.iter_mut().zip(&sh.perm[k - 1..]) {
                    *s = t[*slot];
                }
                qidx[qd] = t[k + qd - 1];
                let Some(qv) = q.map.get(&qidx) else { continue };
                for (s, slot) in pidx.iter_mut().zip(&sh.perm[..k - 1]) {
                    *s = t[*slot];
                }
                pidx[k..].clone_from_slice(&t[k + qd..]);
                let scale = &outer * &sh.sign_rat();
                p.map.accumulate_slot(&mut pidx, k - 1, qv, &scale, &mut out);
            }
        }
        out
    })
}

/// The Balavoine bracket `[P,Q]_B = P ∘̄ Q − (−1)^{pq} Q ∘̄ P`.
pub fn balavoine_bracket(p: &CLCochain, q: &CLCochain) -> Result<CLCochain> {
    if p.dim() != q.dim() {
        return Err(Error::usage("cochains live on spaces of different dimension"));
    }
    let a = circ_bar(p, q);
    let b = circ_bar(q, p);
    let map = a.combine(&b, &(-sign_pow(p.degree * q.degree)))?;
    Ok(CLCochain { degree: p.degree + q.degree, map })
}

/// `P ∘ Q = Σ_{k=1}^{p+1} (−1)^{(k−1)q} P ∘_k Q` on pair-structured arguments.
fn pair_circ(p: &CCochain, q: &CCochain) -> MultiMap {
    let (pd, qd) = (p.degree, q.degree);
    let d = p.dim();
    let n = 2 * (pd + qd) + 1;
    let blocks: Vec<(usize, Vec<Shuffle>)> = (1..=pd + 1).map(|k| (k, shuffles(k - 1, qd))).collect();
    MultiMap::from_fn(vec![d; n], d, |t| {
        let mut out = zero_vec(d);
        let last = t[n - 1];
        let mut pidx = vec![0; 2 * pd + 1];
        let mut qidx = vec![0; 2 * qd + 1];
        for (k, shs) in &blocks {
            let k = *k;
            let outer = sign_pow((k - 1) * qd);
            for sh in shs {
                let scale = &outer * &sh.sign_rat();
                // pairs σ(1..k−1) feed P, pairs σ(k..) feed Q (0-based pair numbers)
                for (j, &pair) in sh.perm[k - 1..].iter().enumerate() {
                    qidx[2 * j] = t[2 * pair];
                    qidx[2 * j + 1] = t[2 * pair + 1];
                }
                for (j, &pair) in sh.perm[..k - 1].iter().enumerate() {
                    pidx[2 * j] = t[2 * pair];
                    pidx[2 * j + 1] = t[2 * pair + 1];
                }
                if k <= pd {
                    // the pair X_{k+q} = (x, y) is split between Q's last slot and P
                    let pair = k + qd - 1;
                    let (x, y) = (t[2 * pair], t[2 * pair + 1]);
                    pidx[2 * k..2 * pd].clone_from_slice(&t[2 * (k + qd)..2 * (pd + qd)]);
                    pidx[2 * pd] = last;
                    qidx[2 * qd] = x;
                    if let Some(qv) = q.map.get(&qidx) {
                        pidx[2 * k - 1] = y;
                        p.map.accumulate_slot(&mut pidx, 2 * k - 2, qv, &scale, &mut out);
                    }
                    qidx[2 * qd] = y;
                    if let Some(qv) = q.map.get(&qidx) {
                        pidx[2 * k - 2] = x;
                        p.map.accumulate_slot(&mut pidx, 2 * k - 1, qv, &scale, &mut out);
                    }
                } else {
                    qidx[2 * qd] = last;
                    if let Some(qv) = q.map.get(&qidx) {
                        p.map.accumulate_slot(&mut pidx, 2 * pd, qv, &scale, &mut out);
                    }
                }
            }
        }
        out
    })
}

/// The graded bracket `⟦P,Q⟧ = P ∘ Q − (−1)^{pq} Q ∘ P` on `Hom(⊗^{2•+1} g, g)`.
pub fn c_bracket(p: &CCochain, q: &CCochain) -> Result<CCochain> {
    if p.dim() != q.dim() {
        return Err(Error::usage("cochains live on spaces of different dimension"));
    }
    let a = pair_circ(p, q);
    let b = pair_circ(q, p);
    let map = a.combine(&b, &(-sign_pow(p.degree * q.degree)))?;
    Ok(CCochain { degree: p.degree + q.degree, map })
}

/// `(Φf)(𝔛_1,…,𝔛_p, x⊗y) = f(𝔛_1,…,𝔛_p,x)⊗y + x⊗f(𝔛_1,…,𝔛_p,y)` on the
/// pair basis of `g ⊗ g`.
pub fn phi_embed(f: &CCochain) -> CLCochain {
    let d = f.dim();
    let dd = d * d;
    let p = f.degree;
    let map = MultiMap::from_fn(vec![dd; p + 1], dd, |t| {
        let mut out = zero_vec(dd);
        let mut idx: Vec<usize> = Vec::with_capacity(2 * p + 1);
        for &u in &t[..p] {
            idx.push(u / d);
            idx.push(u % d);
        }
        let (x, y) = (t[p] / d, t[p] % d);
        idx.push(x);
        if let Some(v) = f.map.get(&idx) {
            for (c, val) in v.iter().enumerate() {
                out[c * d + y] += val;
            }
        }
        idx[2 * p] = y;
        if let Some(v) = f.map.get(&idx) {
            for (c, val) in v.iter().enumerate() {
                out[x * d + c] += val;
            }
        }
        out
    });
    CLCochain { degree: p, map }
}

/// Inverse of [`phi_embed`] on its image; errors if `big` is not in the image.
pub fn phi_inverse(big: &CLCochain, dim: usize) -> Result<CCochain> {
    let d = dim;
    if big.dim() != d * d {
        return Err(Error::usage("cochain does not live on a tensor square of the given dimension"));
    }
    let p = big.degree;
    let half = Rat::new(1, 2);
    let map = MultiMap::from_fn(vec![d; 2 * p + 1], d, |t| {
        let mut idx: Vec<usize> = t[..2 * p].chunks(2).map(|c| c[0] * d + c[1]).collect();
        let a = t[2 * p];
        idx.push(a * d + a);
        let v = big.map.value(&idx);
        (0..d).map(|c| if c == a { &v[c * d + a] * &half } else { v[c * d + a].clone() }).collect()
    });
    let f = CCochain { degree: p, map };
    if phi_embed(&f) != *big {
        return Err(Error::Consistency("cochain is not in the image of the embedding".into()));
    }
    Ok(f)
}

/// `⟦P,Q⟧` computed as `Φ⁻¹([ΦP, ΦQ]_B)`; an independent route to [`c_bracket`].
pub fn c_bracket_via_embedding(p: &CCochain, q: &CCochain) -> Result<CCochain> {
    let b = balavoine_bracket(&phi_embed(p), &phi_embed(q))?;
    phi_inverse(&b, p.dim())
}

/// Which of the two constraints on the final three slots a cochain satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LTSCochainFlag {
    /// `Q(…, x, x, y) = 0`, checked as antisymmetry in the first two of the final three slots.
    pub cond1: bool,
    /// Cyclic sum over the final three slots vanishes.
    pub cond2: bool,
}

impl LTSCochainFlag {
    pub fn both(&self) -> bool {
        self.cond1 && self.cond2
    }
}

/// Checks the two final-slot constraints of any map of arity ≥ 3.
/// Maps of smaller arity are unconstrained and pass.
pub fn final_slot_conditions(map: &MultiMap) -> LTSCochainFlag {
    let n = map.arity();
    if n < 3 {
        return LTSCochainFlag { cond1: true, cond2: true };
    }
    let (a, b, c) = (n - 3, n - 2, n - 1);
    let mut cond1 = true;
    let mut cond2 = true;
    for t in Tuples::new(map.dims()) {
        if cond1 && t[a] <= t[b] {
            let mut s = t.clone();
            s.swap(a, b);
            let v1 = map.value(&t);
            let v2 = map.value(&s);
            if v1.iter().zip(&v2).any(|(x, y)| *x != -y) {
                cond1 = false;
            }
        }
        if cond2 {
            let mut s1 = t.clone();
            s1[a] = t[b];
            s1[b] = t[c];
            s1[c] = t[a];
            let mut s2 = t.clone();
            s2[a] = t[c];
            s2[b] = t[a];
            s2[c] = t[b];
            let mut sum = map.value(&t);
            if let Some(v) = map.get(&s1) {
                axpy(&mut sum, &Rat::one(), v);
            }
            if let Some(v) = map.get(&s2) {
                axpy(&mut sum, &Rat::one(), v);
            }
            if sum.iter().any(|x| !x.is_zero()) {
                cond2 = false;
            }
        }
        if !cond1 && !cond2 {
            break;
        }
    }
    LTSCochainFlag { cond1, cond2 }
}

/// Membership of a cochain in the constrained subalgebra. Degree-0 elements are
/// unconstrained.
pub fn is_lts_cochain(q: &CCochain) -> LTSCochainFlag {
    if q.degree == 0 {
        return LTSCochainFlag { cond1: true, cond2: true };
    }
    final_slot_conditions(&q.map)
}

/// `⟦π,π⟧` for the bracket `π` of a Nambu algebra or Lie triple system.
pub fn mc_defect(a: &Algebra) -> Result<CCochain> {
    if !matches!(a.kind, AlgebraKind::Nambu | AlgebraKind::Lts) {
        return Err(Error::usage(format!("Maurer-Cartan check needs a ternary algebra, got {}", a.kind)));
    }
    let pi = CCochain::from_algebra(a)?;
    c_bracket(&pi, &pi)
}

/// Maurer-Cartan status of a ternary algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McReport {
    pub defect_zero: bool,
    /// First basis tuple `(x1, y1, x2, y2, x)` where `⟦π,π⟧` is nonzero.
    pub witness: Option<(Vec<usize>, Vec<Rat>)>,
    pub constraints: LTSCochainFlag,
}

impl McReport {
    /// The characterization that applies to the algebra's kind.
    pub fn passes(&self, kind: AlgebraKind) -> bool {
        match kind {
            AlgebraKind::Lts => self.defect_zero && self.constraints.both(),
            _ => self.defect_zero,
        }
    }
}

pub fn mc_report(a: &Algebra) -> Result<McReport> {
    let defect = mc_defect(a)?;
    let witness = defect.map.entries().first().map(|(k, v)| (k.clone(), v.to_vec()));
    let pi = CCochain::from_algebra(a)?;
    Ok(McReport { defect_zero: defect.map.is_zero(), witness, constraints: is_lts_cochain(&pi) })
}
