//! 2-term homotopy Lie triple systems: coherence conditions, homomorphisms,
//! 2-homomorphisms, the skeletal and strict classifications, crossed modules,
//! and the passage to and from Lie triple 2-systems.

use crate::algebras::{
    check_lts, check_representation, representation_identities, Algebra, AlgebraKind, CheckReport, Rep,
};
use crate::cohomology::{is_cocycle, LTSCochain};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, vec_add, vec_sub, zero_vec, Mat, Rat};
use crate::multilinear::{Arg, MultiMap, Space, Tuples};

/// `(T₀, T₋₁, d, [·,·,·], J)`. Only the four bracket signatures with at most one
/// degree −1 argument are stored; the others vanish by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermSystem {
    pub t0: Space,
    pub t1: Space,
    /// `T₋₁ → T₀`, shape `dim T₀ × dim T₋₁`.
    pub d: Mat,
    /// `[x,y,z]`.
    pub b000: MultiMap,
    /// `[x,y,f]`.
    pub b001: MultiMap,
    /// `[x,f,y]`.
    pub b010: MultiMap,
    /// `[f,x,y]`.
    pub b100: MultiMap,
    /// `J: T₀⁵ → T₋₁`.
    pub j: MultiMap,
}

fn expect_shape(name: &str, m: &MultiMap, dims: &[usize], codim: usize) -> Result<()> {
    if m.dims() != dims || m.codim() != codim {
        return Err(Error::usage(format!(
            "{name} has shape {:?} -> {}, expected {:?} -> {codim}",
            m.dims(),
            m.codim(),
            dims
        )));
    }
    Ok(())
}

fn expect_mat(name: &str, m: &Mat, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::usage(format!("{name} is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vec(dim);
    v[i] = Rat::one();
    v
}

fn ev(m: &MultiMap, args: &[&[Rat]]) -> Vec<Rat> {
    let args: Vec<Arg<'_>> = args.iter().map(|v| Arg::Vector(v)).collect();
    m.eval(&args).expect("argument lengths checked by construction")
}

fn neg(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|c| -c).collect()
}

fn sum(vs: &[Vec<Rat>]) -> Vec<Rat> {
    let mut out = zero_vec(vs.first().map_or(0, Vec::len));
    for v in vs {
        axpy(&mut out, &Rat::one(), v);
    }
    out
}

fn labels_of(parts: &[(&Space, usize)]) -> Vec<String> {
    parts.iter().map(|(s, i)| s.label(*i).to_string()).collect()
}

impl TwoTermSystem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        t0: Space,
        t1: Space,
        d: Mat,
        b000: MultiMap,
        b001: MultiMap,
        b010: MultiMap,
        b100: MultiMap,
        j: MultiMap,
    ) -> Result<Self> {
        let (n0, n1) = (t0.dim(), t1.dim());
        expect_mat("d", &d, n0, n1)?;
        expect_shape("[x,y,z]", &b000, &[n0, n0, n0], n0)?;
        expect_shape("[x,y,f]", &b001, &[n0, n0, n1], n1)?;
        expect_shape("[x,f,y]", &b010, &[n0, n1, n0], n1)?;
        expect_shape("[f,x,y]", &b100, &[n1, n0, n0], n1)?;
        expect_shape("J", &j, &[n0; 5], n1)?;
        Ok(TwoTermSystem { t0, t1, d, b000, b001, b010, b100, j })
    }

    pub fn zero(t0: Space, t1: Space) -> Self {
        let (n0, n1) = (t0.dim(), t1.dim());
        TwoTermSystem {
            d: Mat::zeros(n0, n1),
            b000: MultiMap::zero(vec![n0; 3], n0),
            b001: MultiMap::zero(vec![n0, n0, n1], n1),
            b010: MultiMap::zero(vec![n0, n1, n0], n1),
            b100: MultiMap::zero(vec![n1, n0, n0], n1),
            j: MultiMap::zero(vec![n0; 5], n1),
            t0,
            t1,
        }
    }

    /// A ternary algebra in degree 0 with `T₋₁ = 0`.
    pub fn from_algebra(g: &Algebra) -> Result<Self> {
        if !g.kind.is_ternary() {
            return Err(Error::usage("degree-0 part needs a ternary bracket"));
        }
        let mut s = Self::zero(g.space.clone(), Space::new(Vec::new())?);
        s.b000 = g.structure.clone();
        Ok(s)
    }

    pub fn n0(&self) -> usize {
        self.t0.dim()
    }

    pub fn n1(&self) -> usize {
        self.t1.dim()
    }

    /// `d = 0`.
    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    /// `J = 0`.
    pub fn is_strict(&self) -> bool {
        self.j.is_zero()
    }

    /// The degree-0 bracket as an algebra.
    pub fn degree_zero(&self) -> Algebra {
        Algebra::new(AlgebraKind::Lts, self.t0.clone(), self.b000.clone()).expect("shape checked")
    }

    fn dmap(&self, f: &[Rat]) -> Vec<Rat> {
        self.d.mul_vec(f)
    }
    fn xyz(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        ev(&self.b000, &[x, y, z])
    }
    fn xyf(&self, x: &[Rat], y: &[Rat], f: &[Rat]) -> Vec<Rat> {
        ev(&self.b001, &[x, y, f])
    }
    fn xfy(&self, x: &[Rat], f: &[Rat], y: &[Rat]) -> Vec<Rat> {
        ev(&self.b010, &[x, f, y])
    }
    fn fxy(&self, f: &[Rat], x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        ev(&self.b100, &[f, x, y])
    }
    fn jac(&self, x: [&[Rat]; 5]) -> Vec<Rat> {
        ev(&self.j, &x)
    }
}

/// Evaluates conditions (a)–(l) on all basis tuples; identities are named
/// `a` through `l`.
pub fn check_two_term(sys: &TwoTermSystem) -> CheckReport {
    let (n0, n1) = (sys.n0(), sys.n1());
    let e0: Vec<Vec<Rat>> = (0..n0).map(|i| unit(n0, i)).collect();
    let e1: Vec<Vec<Rat>> = (0..n1).map(|i| unit(n1, i)).collect();
    let (t0, t1) = (&sys.t0, &sys.t1);
    let mut r = CheckReport::new();
    for name in ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"] {
        r.begin(name);
    }

    // (a), (c) mixed, (e): two degree-0 arguments and one degree −1 argument
    for t in Tuples::new(&[n0, n0, n1]) {
        let (x, y, f) = (&e0[t[0]], &e0[t[1]], &e1[t[2]]);
        let lab = labels_of(&[(t0, t[0]), (t0, t[1]), (t1, t[2])]);
        let df = sys.dmap(f);
        r.compare("a", &t, lab.clone(), sys.dmap(&sys.xyf(x, y, f)), sys.xyz(x, y, &df));
        r.compare("a", &t, lab.clone(), sys.dmap(&sys.xfy(x, f, y)), sys.xyz(x, &df, y));
        r.compare("c", &t, lab.clone(), sys.xyf(x, y, f), neg(&sys.xyf(y, x, f)));
        r.compare("c", &t, lab.clone(), sys.xfy(x, f, y), neg(&sys.fxy(f, x, y)));
        let cyc = sum(&[sys.xyf(x, y, f), sys.xfy(y, f, x), sys.fxy(f, x, y)]);
        r.compare("e", &t, lab, cyc, zero_vec(n1));
    }
    // (b)
    for t in Tuples::new(&[n1, n1, n0]) {
        let (f, g, x) = (&e1[t[0]], &e1[t[1]], &e0[t[2]]);
        let lab = labels_of(&[(t1, t[0]), (t1, t[1]), (t0, t[2])]);
        let (df, dg) = (sys.dmap(f), sys.dmap(g));
        r.compare("b", &t, lab.clone(), sys.xfy(&df, g, x), sys.fxy(f, &dg, x));
        r.compare("b", &t, lab, sys.xyf(&df, x, g), sys.fxy(f, x, &dg));
    }
    // (c), (d) on T₀
    for t in Tuples::uniform(n0, 3) {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let lab = labels_of(&[(t0, t[0]), (t0, t[1]), (t0, t[2])]);
        r.compare("c", &t, lab.clone(), sys.xyz(x, y, z), neg(&sys.xyz(y, x, z)));
        let cyc = sum(&[sys.xyz(x, y, z), sys.xyz(y, z, x), sys.xyz(z, x, y)]);
        r.compare("d", &t, lab, cyc, zero_vec(n0));
    }
    // (f), (g), (h) on T₀⁵
    for t in Tuples::uniform(n0, 5) {
        let x: Vec<&[Rat]> = t.iter().map(|&i| e0[i].as_slice()).collect();
        let lab: Vec<String> = t.iter().map(|&i| t0.label(i).to_string()).collect();
        r.compare(
            "f",
            &t,
            lab.clone(),
            sys.jac([x[0], x[1], x[2], x[3], x[4]]),
            neg(&sys.jac([x[0], x[1], x[3], x[2], x[4]])),
        );
        let cyc = sum(&[
            sys.jac([x[0], x[1], x[2], x[3], x[4]]),
            sys.jac([x[0], x[1], x[3], x[4], x[2]]),
            sys.jac([x[0], x[1], x[4], x[2], x[3]]),
        ]);
        r.compare("g", &t, lab.clone(), cyc, zero_vec(n1));
        let lhs = sys.dmap(&sys.jac([x[0], x[1], x[2], x[3], x[4]]));
        let rhs = fundamental_rhs(sys, &x);
        r.compare("h", &t, lab, lhs, rhs);
    }
    // (i), (j), (k): one degree −1 argument and four degree-0 arguments
    for t in Tuples::new(&[n1, n0, n0, n0, n0]) {
        let f = &e1[t[0]];
        let df = sys.dmap(f);
        let (a, b, c, e) = (&e0[t[1]], &e0[t[2]], &e0[t[3]], &e0[t[4]]);
        let lab = labels_of(&[(t1, t[0]), (t0, t[1]), (t0, t[2]), (t0, t[3]), (t0, t[4])]);
        // (i): f in the first slot, (x2..x5) = (a,b,c,e)
        let lhs = sys.jac([&df, a, b, c, e]);
        let rhs = sum(&[
            neg(&sys.fxy(f, a, &sys.xyz(b, c, e))),
            sys.xfy(b, &sys.fxy(f, a, c), e),
            sys.fxy(&sys.fxy(f, a, b), c, e),
            sys.xyf(b, c, &sys.fxy(f, a, e)),
        ]);
        r.compare("i", &t, lab.clone(), lhs, rhs);
        // (j): f in the third slot, (x1,x2,x4,x5) = (a,b,c,e)
        let lhs = sys.jac([a, b, &df, c, e]);
        let rhs = sum(&[
            neg(&sys.xyf(a, b, &sys.fxy(f, c, e))),
            sys.fxy(f, &sys.xyz(a, b, c), e),
            sys.fxy(&sys.xyf(a, b, f), c, e),
            sys.fxy(f, c, &sys.xyz(a, b, e)),
        ]);
        r.compare("j", &t, lab.clone(), lhs, rhs);
        // (k): f in the last slot, (x1..x4) = (a,b,c,e)
        let lhs = sys.jac([a, b, c, e, &df]);
        let rhs = sum(&[
            neg(&sys.xyf(a, b, &sys.xyf(c, e, f))),
            sys.xyf(c, &sys.xyz(a, b, e), f),
            sys.xyf(&sys.xyz(a, b, c), e, f),
            sys.xyf(c, e, &sys.xyf(a, b, f)),
        ]);
        r.compare("k", &t, lab, lhs, rhs);
    }
    // (l), seven terms on each side
    if n1 > 0 {
        for t in Tuples::uniform(n0, 7) {
            let x: Vec<&[Rat]> = t.iter().map(|&i| e0[i].as_slice()).collect();
            let (lhs, rhs) = coherence_sides(sys, &x);
            let lab: Vec<String> = t.iter().map(|&i| t0.label(i).to_string()).collect();
            r.compare("l", &t, lab, lhs, rhs);
        }
    }
    r
}

/// `−[x1,x2,[x3,x4,x5]] + [x3,[x1,x2,x4],x5] + [[x1,x2,x3],x4,x5] + [x3,x4,[x1,x2,x5]]`.
fn fundamental_rhs(sys: &TwoTermSystem, x: &[&[Rat]]) -> Vec<Rat> {
    sum(&[
        neg(&sys.xyz(x[0], x[1], &sys.xyz(x[2], x[3], x[4]))),
        sys.xyz(x[2], &sys.xyz(x[0], x[1], x[3]), x[4]),
        sys.xyz(&sys.xyz(x[0], x[1], x[2]), x[3], x[4]),
        sys.xyz(x[2], x[3], &sys.xyz(x[0], x[1], x[4])),
    ])
}

fn coherence_sides(sys: &TwoTermSystem, x: &[&[Rat]]) -> (Vec<Rat>, Vec<Rat>) {
    let j = |a: &[Rat], b: &[Rat], c: &[Rat], d: &[Rat], e: &[Rat]| sys.jac([a, b, c, d, e]);
    let br = |a: &[Rat], b: &[Rat], c: &[Rat]| sys.xyz(a, b, c);
    let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    let lhs = sum(&[
        sys.fxy(&j(x1, x2, x3, x4, x5), x6, x7),
        sys.xfy(x5, &j(x1, x2, x3, x4, x6), x7),
        sys.xyf(x1, x2, &j(x3, x4, x5, x6, x7)),
        sys.xyf(x5, x6, &j(x1, x2, x3, x4, x7)),
        j(x1, x2, &br(x3, x4, x5), x6, x7),
        j(x1, x2, x5, &br(x3, x4, x6), x7),
        j(x1, x2, x5, x6, &br(x3, x4, x7)),
    ]);
    let rhs = sum(&[
        sys.xyf(x3, x4, &j(x1, x2, x5, x6, x7)),
        j(&br(x1, x2, x3), x4, x5, x6, x7),
        j(x3, &br(x1, x2, x4), x5, x6, x7),
        j(x3, x4, &br(x1, x2, x5), x6, x7),
        j(x3, x4, x5, &br(x1, x2, x6), x7),
        j(x1, x2, x3, x4, &br(x5, x6, x7)),
        j(x3, x4, x5, x6, &br(x1, x2, x7)),
    ]);
    (lhs, rhs)
}

/// A homomorphism `(φ₀, φ₁, φ₂)` of 2-term systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermHom {
    pub phi0: Mat,
    pub phi1: Mat,
    /// `T₀³ → T₋₁′`.
    pub phi2: MultiMap,
}

impl TwoTermHom {
    pub fn new(phi0: Mat, phi1: Mat, phi2: MultiMap) -> Result<Self> {
        let n0 = phi0.cols();
        expect_shape("φ₂", &phi2, &[n0; 3], phi1.rows())?;
        Ok(TwoTermHom { phi0, phi1, phi2 })
    }

    /// The identity homomorphism, `φ₂ = 0`.
    pub fn identity(sys: &TwoTermSystem) -> Self {
        TwoTermHom {
            phi0: Mat::identity(sys.n0()),
            phi1: Mat::identity(sys.n1()),
            phi2: MultiMap::zero(vec![sys.n0(); 3], sys.n1()),
        }
    }

    /// The zero homomorphism between the given systems.
    pub fn zero(src: &TwoTermSystem, dst: &TwoTermSystem) -> Self {
        TwoTermHom {
            phi0: Mat::zeros(dst.n0(), src.n0()),
            phi1: Mat::zeros(dst.n1(), src.n1()),
            phi2: MultiMap::zero(vec![src.n0(); 3], dst.n1()),
        }
    }

    fn matches(&self, src: &TwoTermSystem, dst: &TwoTermSystem) -> Result<()> {
        expect_mat("φ₀", &self.phi0, dst.n0(), src.n0())?;
        expect_mat("φ₁", &self.phi1, dst.n1(), src.n1())?;
        expect_shape("φ₂", &self.phi2, &[src.n0(); 3], dst.n1())
    }
}

/// Chain-map property and the six homomorphism equations on basis tuples.
pub fn check_hom(f: &TwoTermHom, src: &TwoTermSystem, dst: &TwoTermSystem) -> Result<CheckReport> {
    f.matches(src, dst)?;
    let (n0, n1) = (src.n0(), src.n1());
    let e0: Vec<Vec<Rat>> = (0..n0).map(|i| unit(n0, i)).collect();
    let e1: Vec<Vec<Rat>> = (0..n1).map(|i| unit(n1, i)).collect();
    let t0 = &src.t0;
    let p0 = |v: &[Rat]| f.phi0.mul_vec(v);
    let p1 = |v: &[Rat]| f.phi1.mul_vec(v);
    let p2 = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(&f.phi2, &[a, b, c]);
    let mut r = CheckReport::new();
    for name in ["chain", "homo1", "homo2", "homo3", "homo4", "homo5", "homo6"] {
        r.begin(name);
    }
    for k in 0..n1 {
        let lab = vec![src.t1.label(k).to_string()];
        r.compare("chain", &[k], lab, dst.dmap(&p1(&e1[k])), p0(&src.dmap(&e1[k])));
    }
    for t in Tuples::uniform(n0, 3) {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let lab = labels_of(&[(t0, t[0]), (t0, t[1]), (t0, t[2])]);
        r.compare("homo1", &t, lab.clone(), p2(x, y, z), neg(&p2(y, x, z)));
        r.compare("homo2", &t, lab.clone(), p2(x, y, z), neg(&vec_add(&p2(y, z, x), &p2(z, x, y))));
        let rhs = vec_sub(&p0(&src.xyz(x, y, z)), &dst.xyz(&p0(x), &p0(y), &p0(z)));
        r.compare("homo3", &t, lab, dst.dmap(&p2(x, y, z)), rhs);
    }
    for t in Tuples::new(&[n0, n0, n1]) {
        let (x, y, h) = (&e0[t[0]], &e0[t[1]], &e1[t[2]]);
        let lab = labels_of(&[(t0, t[0]), (t0, t[1]), (&src.t1, t[2])]);
        let dh = src.dmap(h);
        let rhs = vec_sub(&p1(&src.xyf(x, y, h)), &dst.xyf(&p0(x), &p0(y), &p1(h)));
        r.compare("homo4", &t, lab.clone(), p2(x, y, &dh), rhs);
        let rhs = vec_sub(&p1(&src.xfy(x, h, y)), &dst.xfy(&p0(x), &p1(h), &p0(y)));
        r.compare("homo5", &t, lab, p2(x, &dh, y), rhs);
    }
    for t in Tuples::uniform(n0, 5) {
        let x: Vec<&[Rat]> = t.iter().map(|&i| e0[i].as_slice()).collect();
        let lab: Vec<String> = t.iter().map(|&i| t0.label(i).to_string()).collect();
        let (lhs, rhs) = homo6_sides(f, src, dst, &x);
        r.compare("homo6", &t, lab, lhs, rhs);
    }
    Ok(r)
}

fn homo6_sides(f: &TwoTermHom, src: &TwoTermSystem, dst: &TwoTermSystem, x: &[&[Rat]]) -> (Vec<Rat>, Vec<Rat>) {
    let p0 = |v: &[Rat]| f.phi0.mul_vec(v);
    let p2 = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(&f.phi2, &[a, b, c]);
    let y: Vec<Vec<Rat>> = x.iter().map(|v| p0(v)).collect();
    let (x1, x2, x3, x4, x5) = (x[0], x[1], x[2], x[3], x[4]);
    let lhs = sum(&[
        dst.jac([&y[0], &y[1], &y[2], &y[3], &y[4]]),
        dst.fxy(&p2(x1, x2, x3), &y[3], &y[4]),
        dst.xfy(&y[2], &p2(x1, x2, x4), &y[4]),
        dst.xyf(&y[2], &y[3], &p2(x1, x2, x5)),
        p2(&src.xyz(x1, x2, x3), x4, x5),
        p2(x3, &src.xyz(x1, x2, x4), x5),
        p2(x3, x4, &src.xyz(x1, x2, x5)),
    ]);
    let rhs = sum(&[
        dst.xyf(&y[0], &y[1], &p2(x3, x4, x5)),
        p2(x1, x2, &src.xyz(x3, x4, x5)),
        f.phi1.mul_vec(&src.jac([x1, x2, x3, x4, x5])),
    ]);
    (lhs, rhs)
}

/// `f` followed by `g`, with `(g∘f)₂(x,y,z) = g₂(f₀x,f₀y,f₀z) + g₁ f₂(x,y,z)`.
pub fn compose_hom(f: &TwoTermHom, g: &TwoTermHom) -> Result<TwoTermHom> {
    if g.phi0.cols() != f.phi0.rows() || g.phi1.cols() != f.phi1.rows() {
        return Err(Error::usage("codomain of the first homomorphism is not the domain of the second"));
    }
    let n0 = f.phi0.cols();
    let cols: Vec<Vec<Rat>> = (0..n0).map(|i| f.phi0.column(i)).collect();
    let phi2 = MultiMap::from_fn(vec![n0; 3], g.phi1.rows(), |t| {
        let a = ev(&g.phi2, &[&cols[t[0]], &cols[t[1]], &cols[t[2]]]);
        let b = g.phi1.mul_vec(&f.phi2.value(t));
        vec_add(&a, &b)
    });
    Ok(TwoTermHom { phi0: g.phi0.mul(&f.phi0), phi1: g.phi1.mul(&f.phi1), phi2 })
}

/// Builds the system `T′` on the same spaces for which `(φ₀, φ₁, φ₂)` is a
/// homomorphism `T → T′`: the equations for `d′`, the brackets and `J′` are
/// solved using invertibility of `φ₀` and `φ₁`. `φ₂` must satisfy the first
/// two homomorphism equations.
pub fn transport_along(sys: &TwoTermSystem, phi0: &Mat, phi1: &Mat, phi2: &MultiMap) -> Result<TwoTermSystem> {
    let (n0, n1) = (sys.n0(), sys.n1());
    expect_mat("φ₀", phi0, n0, n0)?;
    expect_mat("φ₁", phi1, n1, n1)?;
    expect_shape("φ₂", phi2, &[n0; 3], n1)?;
    if !crate::controlling::final_slot_conditions(phi2).both() {
        return Err(Error::precondition("φ₂ must be antisymmetric in its first two slots and cyclic"));
    }
    let q0 = phi0.inverse().ok_or_else(|| Error::precondition("φ₀ is not invertible"))?;
    let q1 = phi1.inverse().ok_or_else(|| Error::precondition("φ₁ is not invertible"))?;
    let c0: Vec<Vec<Rat>> = (0..n0).map(|i| q0.column(i)).collect();
    let c1: Vec<Vec<Rat>> = (0..n1).map(|i| q1.column(i)).collect();
    let p2 = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(phi2, &[a, b, c]);
    let d = phi0.mul(&sys.d).mul(&q1);
    // [u,v,w]′ = φ₀[x,y,z] − d′φ₂(x,y,z) at x = φ₀⁻¹u, ...
    let b000 = MultiMap::from_fn(vec![n0; 3], n0, |t| {
        let (x, y, z) = (&c0[t[0]], &c0[t[1]], &c0[t[2]]);
        vec_sub(&phi0.mul_vec(&sys.xyz(x, y, z)), &d.mul_vec(&p2(x, y, z)))
    });
    let b001 = MultiMap::from_fn(vec![n0, n0, n1], n1, |t| {
        let (x, y, h) = (&c0[t[0]], &c0[t[1]], &c1[t[2]]);
        vec_sub(&phi1.mul_vec(&sys.xyf(x, y, h)), &p2(x, y, &sys.dmap(h)))
    });
    let b010 = MultiMap::from_fn(vec![n0, n1, n0], n1, |t| {
        let (x, h, y) = (&c0[t[0]], &c1[t[1]], &c0[t[2]]);
        vec_sub(&phi1.mul_vec(&sys.xfy(x, h, y)), &p2(x, &sys.dmap(h), y))
    });
    let b100 = MultiMap::from_fn(vec![n1, n0, n0], n1, |t| neg(&b010.value(&[t[1], t[0], t[2]])));
    let partial = TwoTermSystem {
        t0: sys.t0.clone(),
        t1: sys.t1.clone(),
        d,
        b000,
        b001,
        b010,
        b100,
        j: MultiMap::zero(vec![n0; 5], n1),
    };
    let f = TwoTermHom { phi0: phi0.clone(), phi1: phi1.clone(), phi2: phi2.clone() };
    // J′(φ₀x) = (right side of homo6) − (the other left-hand terms)
    let j = MultiMap::from_fn(vec![n0; 5], n1, |t| {
        let x: Vec<&[Rat]> = t.iter().map(|&i| c0[i].as_slice()).collect();
        let (lhs_without_j, rhs) = homo6_sides(&f, sys, &partial, &x);
        vec_sub(&rhs, &lhs_without_j)
    });
    Ok(TwoTermSystem { j, ..partial })
}

/// A 2-homomorphism: a linear map `τ: T₀ → T₋₁′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoHom {
    pub tau: Mat,
}

/// How the 2-homomorphism equation is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoHomReading {
    /// The expansion of the naturality square of `x ↦ (φ₀x, τx)`:
    /// `[φ₀x,φ₀y,τz] + [φ₀x,τy,φ₀z] + [τx,φ₀y,φ₀z] + [d′τx,τy,φ₀z]
    ///  + [d′τx,φ₀y,τz] + [φ₀x,d′τy,τz] + [d′τx,d′τy,τz] − τ[x,y,z]`.
    Naturality,
    /// The three displayed bracket terms summed over cyclic permutations of
    /// `(x₁,x₂,x₃)`, minus `τ[x₁,x₂,x₃]`.
    Literal,
}

/// Right side of the 2-homomorphism equation, i.e. the required `φ₂ − ψ₂`.
pub fn two_hom_rhs(
    tau: &TwoHom,
    phi: &TwoTermHom,
    src: &TwoTermSystem,
    dst: &TwoTermSystem,
    reading: TwoHomReading,
) -> Result<MultiMap> {
    phi.matches(src, dst)?;
    expect_mat("τ", &tau.tau, dst.n1(), src.n0())?;
    let n0 = src.n0();
    let e0: Vec<Vec<Rat>> = (0..n0).map(|i| unit(n0, i)).collect();
    let p = |v: &[Rat]| phi.phi0.mul_vec(v);
    let t = |v: &[Rat]| tau.tau.mul_vec(v);
    let dt = |v: &[Rat]| dst.dmap(&tau.tau.mul_vec(v));
    let three = |a: &[Rat], b: &[Rat], c: &[Rat]| {
        sum(&[dst.xyf(&p(a), &p(b), &t(c)), dst.xfy(&dt(a), &t(b), &p(c)), dst.xyf(&dt(a), &dt(b), &t(c))])
    };
    Ok(MultiMap::from_fn(vec![n0; 3], dst.n1(), |idx| {
        let (x, y, z) = (&e0[idx[0]], &e0[idx[1]], &e0[idx[2]]);
        let brackets = match reading {
            TwoHomReading::Naturality => sum(&[
                dst.xyf(&p(x), &p(y), &t(z)),
                dst.xfy(&p(x), &t(y), &p(z)),
                dst.fxy(&t(x), &p(y), &p(z)),
                dst.xfy(&dt(x), &t(y), &p(z)),
                dst.xyf(&dt(x), &p(y), &t(z)),
                dst.xyf(&p(x), &dt(y), &t(z)),
                dst.xyf(&dt(x), &dt(y), &t(z)),
            ]),
            TwoHomReading::Literal => sum(&[three(x, y, z), three(y, z, x), three(z, x, y)]),
        };
        vec_sub(&brackets, &t(&src.xyz(x, y, z)))
    }))
}

/// Checks `τ: φ ⇒ ψ`: the chain homotopy `ψ₀ − φ₀ = d′τ`, `ψ₁ − φ₁ = τd`
/// and the 2-homomorphism equation under the chosen reading.
pub fn check_two_hom(
    tau: &TwoHom,
    phi: &TwoTermHom,
    psi: &TwoTermHom,
    src: &TwoTermSystem,
    dst: &TwoTermSystem,
    reading: TwoHomReading,
) -> Result<CheckReport> {
    psi.matches(src, dst)?;
    let rhs = two_hom_rhs(tau, phi, src, dst, reading)?;
    let mut r = CheckReport::new();
    for name in ["homotopy0", "homotopy1", "two-hom"] {
        r.begin(name);
    }
    let h0 = psi.phi0.sub(&phi.phi0);
    let want0 = dst.d.mul(&tau.tau);
    for c in 0..src.n0() {
        r.compare("homotopy0", &[c], vec![src.t0.label(c).to_string()], h0.column(c), want0.column(c));
    }
    let h1 = psi.phi1.sub(&phi.phi1);
    let want1 = tau.tau.mul(&src.d);
    for c in 0..src.n1() {
        r.compare("homotopy1", &[c], vec![src.t1.label(c).to_string()], h1.column(c), want1.column(c));
    }
    let diff = phi.phi2.sub(&psi.phi2)?;
    for t in Tuples::uniform(src.n0(), 3) {
        let lab = labels_of(&[(&src.t0, t[0]), (&src.t0, t[1]), (&src.t0, t[2])]);
        r.compare("two-hom", &t, lab, diff.value(&t), rhs.value(&t));
    }
    Ok(r)
}

/// The homomorphism `ψ` reached from `φ` along `τ` under the naturality
/// reading: `ψ₀ = φ₀ + d′τ`, `ψ₁ = φ₁ + τd`, `ψ₂ = φ₂ − rhs`.
pub fn two_hom_target(tau: &TwoHom, phi: &TwoTermHom, src: &TwoTermSystem, dst: &TwoTermSystem) -> Result<TwoTermHom> {
    let rhs = two_hom_rhs(tau, phi, src, dst, TwoHomReading::Naturality)?;
    Ok(TwoTermHom {
        phi0: phi.phi0.add(&dst.d.mul(&tau.tau)),
        phi1: phi.phi1.add(&tau.tau.mul(&src.d)),
        phi2: phi.phi2.sub(&rhs)?,
    })
}

/// The zero 2-homomorphism `φ ⇒ φ`.
pub fn identity_two_hom(src: &TwoTermSystem, dst: &TwoTermSystem) -> TwoHom {
    TwoHom { tau: Mat::zeros(dst.n1(), src.n0()) }
}

/// `τ′τ = τ′ + τ` for `τ: φ ⇒ ψ`, `τ′: ψ ⇒ μ`.
pub fn vertical_compose(tau: &TwoHom, tau_next: &TwoHom) -> Result<TwoHom> {
    if tau.tau.rows() != tau_next.tau.rows() || tau.tau.cols() != tau_next.tau.cols() {
        return Err(Error::usage("2-homomorphisms have different shapes"));
    }
    Ok(TwoHom { tau: tau.tau.add(&tau_next.tau) })
}

/// Horizontal composite of `τ: φ ⇒ ψ` (inner) and `τ′: φ′ ⇒ ψ′` (outer):
/// `x ↦ τ′(φ₀x) + ψ′₁τ(x)`, a 2-homomorphism `φ′∘φ ⇒ ψ′∘ψ`.
pub fn horizontal_compose(
    inner: &TwoHom,
    inner_source: &TwoTermHom,
    outer: &TwoHom,
    outer_target: &TwoTermHom,
) -> Result<TwoHom> {
    if outer.tau.cols() != inner_source.phi0.rows() || outer_target.phi1.cols() != inner.tau.rows() {
        return Err(Error::usage("2-homomorphisms are not horizontally composable"));
    }
    Ok(TwoHom { tau: outer.tau.mul(&inner_source.phi0).add(&outer_target.phi1.mul(&inner.tau)) })
}

/// `x ↦ τ′(φ₀x) + φ′₁τ(x)`, using the outer source `φ′` in the second term.
/// Differs from [`horizontal_compose`] by `τ′d′τ`.
pub fn horizontal_compose_source_form(
    inner: &TwoHom,
    inner_source: &TwoTermHom,
    outer: &TwoHom,
    outer_source: &TwoTermHom,
) -> Result<TwoHom> {
    horizontal_compose(inner, inner_source, outer, outer_source)
}

/// The data `(g, V, θ, ω)` of a skeletal system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub lts: Algebra,
    pub rep: Rep,
    pub omega: LTSCochain,
}

/// `d = 0`: `(T₀, T₋₁, θ(x,y)f = [f,x,y], J)`, with every part verified.
pub fn skeletal_to_quadruple(sys: &TwoTermSystem) -> Result<Quadruple> {
    if !sys.is_skeletal() {
        return Err(Error::precondition("the system is not skeletal (d ≠ 0)"));
    }
    let report = check_two_term(sys);
    if !report.passed() {
        return Err(Error::precondition(format!("the system fails conditions {:?}", report.failed_identities())));
    }
    let lts = sys.degree_zero();
    let n1 = sys.n1();
    let rep = Rep::from_matrices(lts.clone(), sys.t1.clone(), |x, y| {
        let cols: Vec<Vec<Rat>> = (0..n1).map(|f| sys.b100.value(&[f, x, y])).collect();
        Mat::from_columns(n1, &cols)
    })?;
    let omega = LTSCochain { degree: 3, map: sys.j.clone() };
    if !check_lts(&lts)?.passed() {
        return Err(Error::Consistency("degree-0 bracket is not a Lie triple system".into()));
    }
    if !check_representation(&rep)?.passed() {
        return Err(Error::Consistency("extracted action is not a representation".into()));
    }
    if !crate::controlling::final_slot_conditions(&omega.map).both() || !is_cocycle(&lts, &rep, &omega)? {
        return Err(Error::Consistency("extracted J is not a 3-cocycle".into()));
    }
    Ok(Quadruple { lts, rep, omega })
}

/// Skeletal system with `[f,x,y] = θ(x,y)f`, `[x,f,y] = −θ(x,y)f`,
/// `[x,y,f] = θ(y,x)f − θ(x,y)f` and `J = ω`.
pub fn quadruple_to_skeletal(q: &Quadruple) -> Result<TwoTermSystem> {
    if q.rep.base != q.lts {
        return Err(Error::usage("representation is over a different algebra"));
    }
    if q.omega.degree != 3 || q.omega.map.dims() != [q.lts.dim(); 5] || q.omega.map.codim() != q.rep.module_dim() {
        return Err(Error::usage("ω must be a 3-cochain with values in the module"));
    }
    if !check_representation(&q.rep)?.passed() {
        return Err(Error::precondition("θ is not a representation"));
    }
    if !crate::controlling::final_slot_conditions(&q.omega.map).both() || !is_cocycle(&q.lts, &q.rep, &q.omega)? {
        return Err(Error::precondition("ω is not a 3-cocycle"));
    }
    Ok(system_from_action(
        &q.lts,
        &q.rep.space,
        &q.rep.rho,
        Mat::zeros(q.lts.dim(), q.rep.module_dim()),
        q.omega.map.clone(),
    ))
}

/// The brackets determined by an action `θ` of `T₀` on `T₋₁`.
fn system_from_action(g: &Algebra, v: &Space, theta: &MultiMap, d: Mat, j: MultiMap) -> TwoTermSystem {
    let (n0, n1) = (g.dim(), v.dim());
    let act = |x: usize, y: usize, f: usize| -> Vec<Rat> {
        let m = theta.value(&[x, y]);
        (0..n1).map(|r| m[r * n1 + f].clone()).collect()
    };
    TwoTermSystem {
        t0: g.space.clone(),
        t1: v.clone(),
        d,
        b000: g.structure.clone(),
        b001: MultiMap::from_fn(vec![n0, n0, n1], n1, |t| vec_sub(&act(t[1], t[0], t[2]), &act(t[0], t[1], t[2]))),
        b010: MultiMap::from_fn(vec![n0, n1, n0], n1, |t| neg(&act(t[0], t[2], t[1]))),
        b100: MultiMap::from_fn(vec![n1, n0, n0], n1, |t| act(t[1], t[2], t[0])),
        j,
    }
}

/// `(g, h, μ, θ)` with `θ: h ⊗ h → End(g)` stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub g: Algebra,
    pub h: Algebra,
    /// `g → h`, shape `dim h × dim g`.
    pub mu: Mat,
    pub theta: MultiMap,
}

impl CrossedModule {
    pub fn new(g: Algebra, h: Algebra, mu: Mat, theta: MultiMap) -> Result<Self> {
        expect_mat("μ", &mu, h.dim(), g.dim())?;
        expect_shape("θ", &theta, &[h.dim(), h.dim()], g.dim() * g.dim())?;
        Ok(CrossedModule { g, h, mu, theta })
    }

    /// `(g, g, id, ad)`.
    pub fn identity_adjoint(g: &Algebra) -> Self {
        let ad = crate::algebras::adjoint_unchecked(g);
        CrossedModule { g: g.clone(), h: g.clone(), mu: Mat::identity(g.dim()), theta: ad.rho }
    }

    /// `θ` as a representation of `h` on `g`.
    pub fn action(&self) -> Result<Rep> {
        Rep::new(self.h.clone(), self.g.space.clone(), self.theta.clone())
    }

    fn act(&self, x: &[Rat], y: &[Rat], f: &[Rat]) -> Vec<Rat> {
        let m = ev(&self.theta, &[x, y]);
        let n = self.g.dim();
        Mat::from_vec(n, n, m).expect("square").mul_vec(f)
    }
}

/// `μ` a homomorphism, `θ` a representation, the four compatibility
/// equations, and the two equations `−θ(μf,x)g = θ(μg,x)f`,
/// `θ(x,μf)g − θ(μf,x)g = θ(x,μg)f` needed for the associated strict system.
pub fn check_crossed_module(cm: &CrossedModule) -> Result<CheckReport> {
    for (name, a) in [("g", &cm.g), ("h", &cm.h)] {
        if !check_lts(a)?.passed() {
            return Err(Error::precondition(format!("{name} is not a Lie triple system")));
        }
    }
    let (m, n) = (cm.g.dim(), cm.h.dim());
    let eg: Vec<Vec<Rat>> = (0..m).map(|i| unit(m, i)).collect();
    let eh: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
    let (sg, sh) = (&cm.g.space, &cm.h.space);
    let mu = |v: &[Rat]| cm.mu.mul_vec(v);
    let bg = |a: &[Rat], b: &[Rat], c: &[Rat]| cm.g.bracket(&[Arg::Vector(a), Arg::Vector(b), Arg::Vector(c)]);
    let bh = |a: &[Rat], b: &[Rat], c: &[Rat]| cm.h.bracket(&[Arg::Vector(a), Arg::Vector(b), Arg::Vector(c)]);
    let mut r = CheckReport::new();
    r.begin("mu-hom");
    for t in Tuples::uniform(m, 3) {
        let (f, g, k) = (&eg[t[0]], &eg[t[1]], &eg[t[2]]);
        let lab = labels_of(&[(sg, t[0]), (sg, t[1]), (sg, t[2])]);
        r.compare("mu-hom", &t, lab, mu(&bg(f, g, k)), bh(&mu(f), &mu(g), &mu(k)));
    }
    r.merge("rep", representation_identities(&cm.action()?));
    for name in ["cmc1", "cmc2", "cmc3", "cmc4", "cmc-b1", "cmc-b2"] {
        r.begin(name);
    }
    for t in Tuples::new(&[n, n, m]) {
        let (x, y, f) = (&eh[t[0]], &eh[t[1]], &eg[t[2]]);
        let lab = labels_of(&[(sh, t[0]), (sh, t[1]), (sg, t[2])]);
        r.compare("cmc1", &t, lab, mu(&cm.act(x, y, f)), bh(&mu(f), x, y));
    }
    for t in Tuples::uniform(m, 3) {
        let (f, g, k) = (&eg[t[0]], &eg[t[1]], &eg[t[2]]);
        let lab = labels_of(&[(sg, t[0]), (sg, t[1]), (sg, t[2])]);
        r.compare("cmc2", &t, lab, cm.act(&mu(f), &mu(g), k), bg(k, f, g));
    }
    for t in Tuples::new(&[n, m, m]) {
        let (x, f, g) = (&eh[t[0]], &eg[t[1]], &eg[t[2]]);
        let lab = labels_of(&[(sh, t[0]), (sg, t[1]), (sg, t[2])]);
        let (mf, mg) = (mu(f), mu(g));
        r.compare("cmc3", &t, lab.clone(), mu(&cm.act(x, &mf, g)), bh(&mg, x, &mf));
        r.compare("cmc4", &t, lab.clone(), mu(&cm.act(&mf, x, g)), bh(&mg, &mf, x));
        r.compare("cmc-b1", &t, lab.clone(), neg(&cm.act(&mf, x, g)), cm.act(&mg, x, f));
        r.compare("cmc-b2", &t, lab, vec_sub(&cm.act(x, &mf, g), &cm.act(&mf, x, g)), cm.act(x, &mg, f));
    }
    Ok(r)
}

/// Whether every `θ(x,y)` is a derivation of the bracket of `g`.
pub fn check_derivation_action(cm: &CrossedModule) -> CheckReport {
    let (m, n) = (cm.g.dim(), cm.h.dim());
    let eg: Vec<Vec<Rat>> = (0..m).map(|i| unit(m, i)).collect();
    let eh: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
    let bg = |a: &[Rat], b: &[Rat], c: &[Rat]| cm.g.bracket(&[Arg::Vector(a), Arg::Vector(b), Arg::Vector(c)]);
    let mut r = CheckReport::new();
    r.begin("derivation");
    for t in Tuples::new(&[n, n, m, m, m]) {
        let (x, y) = (&eh[t[0]], &eh[t[1]]);
        let (f, g, k) = (&eg[t[2]], &eg[t[3]], &eg[t[4]]);
        let th = |v: &[Rat]| cm.act(x, y, v);
        let lhs = th(&bg(f, g, k));
        let rhs = sum(&[bg(&th(f), g, k), bg(f, &th(g), k), bg(f, g, &th(k))]);
        let lab = labels_of(&[
            (&cm.h.space, t[0]),
            (&cm.h.space, t[1]),
            (&cm.g.space, t[2]),
            (&cm.g.space, t[3]),
            (&cm.g.space, t[4]),
        ]);
        r.compare("derivation", &t, lab, lhs, rhs);
    }
    r
}

/// `[df,dg,h] = [df,g,dh] = [f,dg,dh]` on all basis triples of `T₋₁`.
pub fn strict_side_check(sys: &TwoTermSystem) -> CheckReport {
    let n1 = sys.n1();
    let e1: Vec<Vec<Rat>> = (0..n1).map(|i| unit(n1, i)).collect();
    let mut r = CheckReport::new();
    r.begin("strict-bracket");
    for t in Tuples::uniform(n1, 3) {
        let (f, g, h) = (&e1[t[0]], &e1[t[1]], &e1[t[2]]);
        let (df, dg, dh) = (sys.dmap(f), sys.dmap(g), sys.dmap(h));
        let lab = labels_of(&[(&sys.t1, t[0]), (&sys.t1, t[1]), (&sys.t1, t[2])]);
        let a = sys.xyf(&df, &dg, h);
        r.compare("strict-bracket", &t, lab.clone(), a.clone(), sys.xfy(&df, g, &dh));
        r.compare("strict-bracket", &t, lab, a, sys.fxy(f, &dg, &dh));
    }
    r
}

/// `J = 0`: `g = T₋₁` with `[f,g,h] = [df,dg,h]`, `h = T₀`, `μ = d`,
/// `θ(x,y)f = [f,x,y]`.
pub fn strict_to_crossed(sys: &TwoTermSystem) -> Result<CrossedModule> {
    if !sys.is_strict() {
        return Err(Error::precondition("the system is not strict (J ≠ 0)"));
    }
    let side = strict_side_check(sys);
    if let Some(v) = side.violations.first() {
        return Err(Error::precondition(format!(
            "[df,dg,h] = [df,g,dh] = [f,dg,dh] fails at ({})",
            v.witness_labels.join(", ")
        )));
    }
    let report = check_two_term(sys);
    if !report.passed() {
        return Err(Error::precondition(format!("the system fails conditions {:?}", report.failed_identities())));
    }
    let (n0, n1) = (sys.n0(), sys.n1());
    let cols: Vec<Vec<Rat>> = (0..n1).map(|i| sys.d.column(i)).collect();
    let gbr = MultiMap::from_fn(vec![n1; 3], n1, |t| ev(&sys.b001, &[&cols[t[0]], &cols[t[1]], &unit(n1, t[2])]));
    let g = Algebra::new(AlgebraKind::Lts, sys.t1.clone(), gbr)?;
    let theta = MultiMap::from_fn(vec![n0, n0], n1 * n1, |t| {
        let mut m = zero_vec(n1 * n1);
        for f in 0..n1 {
            let v = sys.b100.value(&[f, t[0], t[1]]);
            for (row, c) in v.into_iter().enumerate() {
                m[row * n1 + f] = c;
            }
        }
        m
    });
    CrossedModule::new(g, sys.degree_zero(), sys.d.clone(), theta)
}

/// The strict system `T₋₁ = g`, `T₀ = h`, `d = μ`, brackets from `θ`, `J = 0`.
pub fn crossed_to_strict(cm: &CrossedModule) -> Result<TwoTermSystem> {
    let (m, n) = (cm.g.dim(), cm.h.dim());
    expect_mat("μ", &cm.mu, n, m)?;
    Ok(system_from_action(&cm.h, &cm.g.space, &cm.theta, cm.mu.clone(), MultiMap::zero(vec![n; 5], m)))
}

/// A Lie triple 2-system on `L₀` (objects) and `L₁` (morphisms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVectorSystem {
    pub l0: Space,
    pub l1: Space,
    /// Source, `L₁ → L₀`.
    pub s: Mat,
    /// Target, `L₁ → L₀`.
    pub t: Mat,
    /// Identity morphisms, `L₀ → L₁`.
    pub i: Mat,
    pub object_bracket: MultiMap,
    pub morphism_bracket: MultiMap,
    /// The fundamentor, `L₀⁵ → L₁`.
    pub fundamentor: MultiMap,
}

impl TwoVectorSystem {
    /// Re-expresses the morphism space in the basis given by the columns of `p`.
    pub fn change_morphism_basis(&self, p: &Mat) -> Result<Self> {
        let n = self.l1.dim();
        expect_mat("basis change", p, n, n)?;
        let q = p.inverse().ok_or_else(|| Error::usage("basis change is not invertible"))?;
        let cols: Vec<Vec<Rat>> = (0..n).map(|c| p.column(c)).collect();
        Ok(TwoVectorSystem {
            l0: self.l0.clone(),
            l1: self.l1.clone(),
            s: self.s.mul(p),
            t: self.t.mul(p),
            i: q.mul(&self.i),
            object_bracket: self.object_bracket.clone(),
            morphism_bracket: MultiMap::from_fn(vec![n; 3], n, |t| {
                q.mul_vec(&ev(&self.morphism_bracket, &[&cols[t[0]], &cols[t[1]], &cols[t[2]]]))
            }),
            fundamentor: self.fundamentor.map_values(&q),
        })
    }
}

/// `L₀ = T₀`, `L₁ = T₀ ⊕ T₋₁`, `s(x+f) = x`, `t(x+f) = x + df`, the
/// eight-term morphism bracket and `𝒥 = ([x₁,x₂,[x₃,x₄,x₅]], J)`.
pub fn categorify(sys: &TwoTermSystem) -> Result<TwoVectorSystem> {
    let report = check_two_term(sys);
    if !report.passed() {
        return Err(Error::precondition(format!("the system fails conditions {:?}", report.failed_identities())));
    }
    let (n0, n1) = (sys.n0(), sys.n1());
    let big = n0 + n1;
    let ids = Space::new(sys.t0.labels().iter().map(|l| format!("1_{l}")).collect())?;
    let l1 = ids.direct_sum(&sys.t1)?;
    let s = Mat::identity(n0).hstack(&Mat::zeros(n0, n1));
    let t = Mat::identity(n0).hstack(&sys.d);
    let i = Mat::identity(n0).vstack(&Mat::zeros(n1, n0));
    let split = |v: &[Rat]| (v[..n0].to_vec(), v[n0..].to_vec());
    let join = |x: Vec<Rat>, f: Vec<Rat>| [x, f].concat();
    let morphism_bracket = MultiMap::from_fn(vec![big; 3], big, |idx| {
        let (x, f) = split(&unit(big, idx[0]));
        let (y, g) = split(&unit(big, idx[1]));
        let (z, h) = split(&unit(big, idx[2]));
        let (df, dg) = (sys.dmap(&f), sys.dmap(&g));
        let top = sys.xyz(&x, &y, &z);
        let bottom = sum(&[
            sys.xyf(&x, &y, &h),
            sys.xfy(&x, &g, &z),
            sys.fxy(&f, &y, &z),
            sys.xfy(&df, &g, &z),
            sys.xyf(&df, &y, &h),
            sys.xyf(&x, &dg, &h),
            sys.xyf(&df, &dg, &h),
        ]);
        join(top, bottom)
    });
    let fundamentor = MultiMap::from_fn(vec![n0; 5], big, |idx| {
        let e: Vec<Vec<Rat>> = idx.iter().map(|&k| unit(n0, k)).collect();
        let src = sys.xyz(&e[0], &e[1], &sys.xyz(&e[2], &e[3], &e[4]));
        join(src, sys.jac([&e[0], &e[1], &e[2], &e[3], &e[4]]))
    });
    let l = TwoVectorSystem {
        l0: sys.t0.clone(),
        l1,
        s,
        t,
        i,
        object_bracket: sys.b000.clone(),
        morphism_bracket,
        fundamentor,
    };
    let fr = fundamentor_ends(&l);
    if !fr.passed() {
        return Err(Error::Consistency(format!(
            "fundamentor has the wrong source or target: {:?}",
            fr.failed_identities()
        )));
    }
    Ok(l)
}

/// Source of `𝒥` is `{x₁,x₂,{x₃,x₄,x₅}}`; its target is
/// `{{x₁,x₂,x₃},x₄,x₅} + {x₃,{x₁,x₂,x₄},x₅} + {x₃,x₄,{x₁,x₂,x₅}}`.
fn fundamentor_ends(l: &TwoVectorSystem) -> CheckReport {
    let n0 = l.l0.dim();
    let br = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(&l.object_bracket, &[a, b, c]);
    let mut r = CheckReport::new();
    r.begin("fundamentor-source");
    r.begin("fundamentor-target");
    for t in Tuples::uniform(n0, 5) {
        let e: Vec<Vec<Rat>> = t.iter().map(|&k| unit(n0, k)).collect();
        let lab: Vec<String> = t.iter().map(|&k| l.l0.label(k).to_string()).collect();
        let jv = l.fundamentor.value(&t);
        r.compare("fundamentor-source", &t, lab.clone(), l.s.mul_vec(&jv), br(&e[0], &e[1], &br(&e[2], &e[3], &e[4])));
        let target = sum(&[
            br(&br(&e[0], &e[1], &e[2]), &e[3], &e[4]),
            br(&e[2], &br(&e[0], &e[1], &e[3]), &e[4]),
            br(&e[2], &e[3], &br(&e[0], &e[1], &e[4])),
        ]);
        r.compare("fundamentor-target", &t, lab, l.t.mul_vec(&jv), target);
    }
    r
}

/// Structural laws of a Lie triple 2-system: `s∘i = t∘i = 1`, the bracket is
/// a functor (compatible with `s`, `t`, `i`), antisymmetric and cyclic on
/// morphisms, and `𝒥` has the required source and target. Naturality of `𝒥`
/// and the fundamentor identity are checked through conditions (i)–(l) of
/// the associated 2-term system (prefix `reduced:`).
pub fn check_two_vector(l: &TwoVectorSystem) -> Result<CheckReport> {
    let (n0, n1) = (l.l0.dim(), l.l1.dim());
    expect_mat("s", &l.s, n0, n1)?;
    expect_mat("t", &l.t, n0, n1)?;
    expect_mat("i", &l.i, n1, n0)?;
    let mut r = CheckReport::new();
    for name in ["source-identity", "target-identity", "functor-s", "functor-t", "functor-i", "antisymmetry", "cyclic"]
    {
        r.begin(name);
    }
    for c in 0..n0 {
        let lab = vec![l.l0.label(c).to_string()];
        r.compare("source-identity", &[c], lab.clone(), l.s.mul(&l.i).column(c), unit(n0, c));
        r.compare("target-identity", &[c], lab, l.t.mul(&l.i).column(c), unit(n0, c));
    }
    let obr = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(&l.object_bracket, &[a, b, c]);
    let mbr = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(&l.morphism_bracket, &[a, b, c]);
    for t in Tuples::uniform(n1, 3) {
        let e: Vec<Vec<Rat>> = t.iter().map(|&k| unit(n1, k)).collect();
        let lab: Vec<String> = t.iter().map(|&k| l.l1.label(k).to_string()).collect();
        let b = mbr(&e[0], &e[1], &e[2]);
        let (sa, sb, sc) = (l.s.mul_vec(&e[0]), l.s.mul_vec(&e[1]), l.s.mul_vec(&e[2]));
        let (ta, tb, tc) = (l.t.mul_vec(&e[0]), l.t.mul_vec(&e[1]), l.t.mul_vec(&e[2]));
        r.compare("functor-s", &t, lab.clone(), l.s.mul_vec(&b), obr(&sa, &sb, &sc));
        r.compare("functor-t", &t, lab.clone(), l.t.mul_vec(&b), obr(&ta, &tb, &tc));
        r.compare("antisymmetry", &t, lab.clone(), b.clone(), neg(&mbr(&e[1], &e[0], &e[2])));
        let cyc = sum(&[b, mbr(&e[1], &e[2], &e[0]), mbr(&e[2], &e[0], &e[1])]);
        r.compare("cyclic", &t, lab, cyc, zero_vec(n1));
    }
    for t in Tuples::uniform(n0, 3) {
        let e: Vec<Vec<Rat>> = t.iter().map(|&k| l.i.column(k)).collect();
        let lab: Vec<String> = t.iter().map(|&k| l.l0.label(k).to_string()).collect();
        let want = l.i.mul_vec(&l.object_bracket.value(&t));
        r.compare("functor-i", &t, lab, mbr(&e[0], &e[1], &e[2]), want);
    }
    r.merge("", fundamentor_ends(l));
    let reduced = check_two_term(&decategorify(l)?);
    r.merge("reduced", reduced);
    Ok(r)
}

/// Kernel of `s` in reduced echelon form, as columns of an `L₁ × k` matrix,
/// and the positions of its free columns.
fn source_kernel(l: &TwoVectorSystem) -> (Mat, Vec<usize>) {
    let kernel = l.s.kernel_basis();
    let free = kernel.iter().map(|v| v.iter().rposition(|c| !c.is_zero()).expect("nonzero")).collect();
    (Mat::from_columns(l.l1.dim(), &kernel), free)
}

/// `T₀ = L₀`, `T₋₁ = ker s`, `d = t|ker s`; brackets `{1_x,1_y,1_z}`,
/// `{1_x,1_y,h}`, `{1_x,h,1_y}`, `{h,1_x,1_y}` and `J = 𝒥 − 1_{s𝒥}`.
pub fn decategorify(l: &TwoVectorSystem) -> Result<TwoTermSystem> {
    let n0 = l.l0.dim();
    let (k, free) = source_kernel(l);
    let n1 = k.cols();
    let coords = |v: &[Rat]| -> Result<Vec<Rat>> {
        let c: Vec<Rat> = free.iter().map(|&p| v[p].clone()).collect();
        if k.mul_vec(&c) != v {
            return Err(Error::Consistency("morphism is not in the kernel of the source map".into()));
        }
        Ok(c)
    };
    let labels: Vec<String> = free.iter().map(|&p| l.l1.label(p).to_string()).collect();
    let t1 = Space::new(labels).unwrap_or_else(|_| Space::with_prefix("k", n1));
    let id: Vec<Vec<Rat>> = (0..n0).map(|c| l.i.column(c)).collect();
    let kc: Vec<Vec<Rat>> = (0..n1).map(|c| k.column(c)).collect();
    let mbr = |a: &[Rat], b: &[Rat], c: &[Rat]| ev(&l.morphism_bracket, &[a, b, c]);
    let b000 = MultiMap::from_fn(vec![n0; 3], n0, |t| l.s.mul_vec(&mbr(&id[t[0]], &id[t[1]], &id[t[2]])));
    let mut err = None;
    let mut take = |v: Vec<Rat>| match coords(&v) {
        Ok(c) => c,
        Err(e) => {
            err.get_or_insert(e);
            zero_vec(n1)
        }
    };
    let b001 = MultiMap::from_fn(vec![n0, n0, n1], n1, |t| take(mbr(&id[t[0]], &id[t[1]], &kc[t[2]])));
    let b010 = MultiMap::from_fn(vec![n0, n1, n0], n1, |t| take(mbr(&id[t[0]], &kc[t[1]], &id[t[2]])));
    let b100 = MultiMap::from_fn(vec![n1, n0, n0], n1, |t| take(mbr(&kc[t[0]], &id[t[1]], &id[t[2]])));
    let j = MultiMap::from_fn(vec![n0; 5], n1, |t| {
        let jv = l.fundamentor.value(t);
        take(vec_sub(&jv, &l.i.mul_vec(&l.s.mul_vec(&jv))))
    });
    if let Some(e) = err {
        return Err(e);
    }
    TwoTermSystem::new(l.l0.clone(), t1, l.t.mul(&k), b000, b001, b010, b100, j)
}

/// `β: S(T(sys)) → sys`: identity on `T₀` and the canonical `ker s ≅ T₋₁`, with `φ₂ = 0`.
pub fn beta(sys: &TwoTermSystem) -> Result<TwoTermHom> {
    let l = categorify(sys)?;
    let (k, _) = source_kernel(&l);
    let (n0, n1) = (sys.n0(), sys.n1());
    let rows: Vec<Vec<Rat>> = (n0..n0 + n1).map(|r| k.row(r).to_vec()).collect();
    let phi1 = if n1 == 0 { Mat::zeros(0, k.cols()) } else { Mat::from_rows(rows)? };
    Ok(TwoTermHom { phi0: Mat::identity(n0), phi1, phi2: MultiMap::zero(vec![n0; 3], n1) })
}

/// `α: T(S(L)) → L` on morphisms: `x + f ↦ i(x) + f`.
pub fn alpha(l: &TwoVectorSystem) -> Mat {
    let (k, _) = source_kernel(l);
    l.i.hstack(&k)
}

/// Checks that `α` is an isomorphism of Lie triple 2-systems
/// `T(S(L)) → L`: invertible, compatible with `s`, `t`, `i`, the morphism
/// bracket and the fundamentor.
pub fn check_alpha(l: &TwoVectorSystem) -> Result<CheckReport> {
    let back = categorify(&decategorify(l)?)?;
    let a = alpha(l);
    let mut r = CheckReport::new();
    for name in
        ["alpha-invertible", "alpha-source", "alpha-target", "alpha-identity", "alpha-bracket", "alpha-fundamentor"]
    {
        r.begin(name);
    }
    let inv_ok = a.rows() == a.cols() && a.inverse().is_some();
    r.compare("alpha-invertible", &[], vec![], vec![Rat::from_int(inv_ok as i64)], vec![Rat::one()]);
    if !inv_ok {
        return Ok(r);
    }
    let n1 = a.cols();
    for c in 0..n1 {
        let lab = vec![back.l1.label(c).to_string()];
        let col = a.column(c);
        r.compare("alpha-source", &[c], lab.clone(), l.s.mul_vec(&col), back.s.column(c));
        r.compare("alpha-target", &[c], lab, l.t.mul_vec(&col), back.t.column(c));
    }
    for c in 0..l.l0.dim() {
        let lab = vec![l.l0.label(c).to_string()];
        r.compare("alpha-identity", &[c], lab, a.mul_vec(&back.i.column(c)), l.i.column(c));
    }
    let cols: Vec<Vec<Rat>> = (0..n1).map(|c| a.column(c)).collect();
    for t in Tuples::uniform(n1, 3) {
        let lab: Vec<String> = t.iter().map(|&k| back.l1.label(k).to_string()).collect();
        let lhs = a.mul_vec(&back.morphism_bracket.value(&t));
        let rhs = ev(&l.morphism_bracket, &[&cols[t[0]], &cols[t[1]], &cols[t[2]]]);
        r.compare("alpha-bracket", &t, lab, lhs, rhs);
    }
    for t in Tuples::uniform(l.l0.dim(), 5) {
        let lab: Vec<String> = t.iter().map(|&k| l.l0.label(k).to_string()).collect();
        r.compare("alpha-fundamentor", &t, lab, a.mul_vec(&back.fundamentor.value(&t)), l.fundamentor.value(&t));
    }
    Ok(r)
}

/// A seeded `φ₂: T₀³ → T₋₁` that is antisymmetric in its first two slots and cyclic.
pub fn random_phi2(n0: usize, n1: usize, seed: u64) -> MultiMap {
    use rand::{Rng, SeedableRng};
    let basis = crate::cohomology::CochainBasis::new(n0, n1, 2).expect("degree 2");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<Rat> = (0..basis.len()).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect();
    basis.combine(&coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{broken_fundamental, random_invertible, sl2_lts, trivial_rep, two_term_systems, zero_lts};
    use crate::exactlin::rat;
    use proptest::prelude::*;

    fn sys(name: &str) -> TwoTermSystem {
        two_term_systems().into_iter().find(|(n, _)| n == name).expect("corpus system").1
    }

    #[test]
    fn corpus_systems_are_coherent() {
        for (name, s) in two_term_systems() {
            let r = check_two_term(&s);
            assert!(r.passed(), "{name}: {:?}", r.failed_identities());
        }
        let t = sys("sl2/transported");
        assert!(!t.is_skeletal() && !t.is_strict());
    }

    #[test]
    fn broken_degree_zero_fails_fundamental_identity() {
        let mut s = TwoTermSystem::zero(broken_fundamental().space.clone(), Space::with_prefix("f", 1));
        s.b000 = broken_fundamental().structure;
        let r = check_two_term(&s);
        assert_eq!(r.failed_identities(), vec!["h".to_string()]);
        assert_eq!(r.violations[0].witness.len(), 5);
    }

    #[test]
    fn skeletal_round_trip() {
        for name in ["zero2/skeletal", "sl2/adjoint-skeletal"] {
            let s = sys(name);
            let q = skeletal_to_quadruple(&s).unwrap();
            assert_eq!(quadruple_to_skeletal(&q).unwrap(), s, "{name}");
        }
        assert!(!sys("zero2/skeletal").j.is_zero());
        assert!(matches!(skeletal_to_quadruple(&sys("sl2/identity-strict")), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let g = zero_lts(2);
        let mut omega = LTSCochain::zero(2, 1, 3);
        // not cyclic in the final three slots
        omega.map.set(&[0, 1, 0, 1, 1], vec![rat(1)]);
        let q = Quadruple { lts: g.clone(), rep: trivial_rep(&g), omega };
        assert!(quadruple_to_skeletal(&q).is_err());
    }

    #[test]
    fn strict_round_trip() {
        for name in ["sl2/identity-strict", "heisenberg/identity-strict"] {
            let s = sys(name);
            let cm = strict_to_crossed(&s).unwrap();
            assert!(check_crossed_module(&cm).unwrap().passed(), "{name}");
            assert_eq!(crossed_to_strict(&cm).unwrap(), s);
            assert_eq!(strict_to_crossed(&crossed_to_strict(&cm).unwrap()).unwrap(), cm);
        }
        assert!(matches!(strict_to_crossed(&sys("zero2/skeletal")), Err(Error::Precondition(_))));
    }

    #[test]
    fn identity_adjoint_crossed_module() {
        let cm = CrossedModule::identity_adjoint(&sl2_lts());
        assert!(check_crossed_module(&cm).unwrap().passed());
        let mut bad = cm.clone();
        bad.theta = bad.theta.scale(&rat(-1));
        let r = check_crossed_module(&bad).unwrap();
        assert!(!r.identity_passed("cmc1"));
        // ad_{h,h} is not a derivation of the sl2 bracket
        assert!(!check_derivation_action(&cm).passed());
    }

    #[test]
    fn identity_hom_and_composition() {
        let a = sys("sl2/identity-strict");
        let id = TwoTermHom::identity(&a);
        assert!(check_hom(&id, &a, &a).unwrap().passed());
        let (p0, p1, p2) = (random_invertible(3, 1), random_invertible(3, 2), random_phi2(3, 3, 3));
        let b = transport_along(&a, &p0, &p1, &p2).unwrap();
        let f = TwoTermHom::new(p0, p1, p2).unwrap();
        assert!(check_hom(&f, &a, &b).unwrap().passed());
        let (q0, q1, q2) = (random_invertible(3, 4), random_invertible(3, 5), random_phi2(3, 3, 6));
        let c = transport_along(&b, &q0, &q1, &q2).unwrap();
        let g = TwoTermHom::new(q0, q1, q2).unwrap();
        let (r0, r1, r2) = (random_invertible(3, 7), random_invertible(3, 8), random_phi2(3, 3, 9));
        let d = transport_along(&c, &r0, &r1, &r2).unwrap();
        let h = TwoTermHom::new(r0, r1, r2).unwrap();
        let gf = compose_hom(&f, &g).unwrap();
        assert!(check_hom(&gf, &a, &c).unwrap().passed());
        let left = compose_hom(&gf, &h).unwrap();
        let right = compose_hom(&f, &compose_hom(&g, &h).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(compose_hom(&TwoTermHom::identity(&a), &f).unwrap(), f);
        assert_eq!(compose_hom(&f, &TwoTermHom::identity(&b)).unwrap(), f);
        assert!(check_hom(&left, &a, &d).unwrap().passed());
    }

    #[test]
    fn broken_hom_is_reported() {
        let a = sys("sl2/identity-strict");
        let mut f = TwoTermHom::identity(&a);
        f.phi1 = f.phi1.scale(&rat(2));
        let r = check_hom(&f, &a, &a).unwrap();
        assert!(!r.identity_passed("chain"));
    }

    fn random_tau(rows: usize, cols: usize, seed: u64) -> TwoHom {
        let m = random_invertible(rows.max(cols), seed);
        let data: Vec<Rat> = (0..rows).flat_map(|r| m.row(r)[..cols].to_vec()).collect();
        TwoHom { tau: Mat::from_vec(rows, cols, data).unwrap() }
    }

    #[test]
    fn two_homomorphisms_and_composites() {
        let a = sys("sl2/transported");
        let (p0, p1, p2) = (random_invertible(3, 21), random_invertible(3, 22), random_phi2(3, 3, 23));
        let b = transport_along(&a, &p0, &p1, &p2).unwrap();
        let phi = TwoTermHom::new(p0, p1, p2).unwrap();
        let tau = random_tau(3, 3, 24);
        let psi = two_hom_target(&tau, &phi, &a, &b).unwrap();
        assert!(check_hom(&psi, &a, &b).unwrap().passed());
        assert!(check_two_hom(&tau, &phi, &psi, &a, &b, TwoHomReading::Naturality).unwrap().passed());
        assert!(!check_two_hom(&tau, &phi, &psi, &a, &b, TwoHomReading::Literal).unwrap().passed());
        let zero = identity_two_hom(&a, &b);
        assert!(check_two_hom(&zero, &phi, &phi, &a, &b, TwoHomReading::Literal).unwrap().passed());

        // vertical
        let tau2 = random_tau(3, 3, 25);
        let mu = two_hom_target(&tau2, &psi, &a, &b).unwrap();
        let v = vertical_compose(&tau, &tau2).unwrap();
        assert!(check_two_hom(&v, &phi, &mu, &a, &b, TwoHomReading::Naturality).unwrap().passed());

        // horizontal
        let (q0, q1, q2) = (random_invertible(3, 26), random_invertible(3, 27), random_phi2(3, 3, 28));
        let c = transport_along(&b, &q0, &q1, &q2).unwrap();
        let phi_out = TwoTermHom::new(q0, q1, q2).unwrap();
        let tau_out = random_tau(3, 3, 29);
        let psi_out = two_hom_target(&tau_out, &phi_out, &b, &c).unwrap();
        let h = horizontal_compose(&tau, &phi, &tau_out, &psi_out).unwrap();
        let src = compose_hom(&phi, &phi_out).unwrap();
        let dst = compose_hom(&psi, &psi_out).unwrap();
        let r = check_two_hom(&h, &src, &dst, &a, &c, TwoHomReading::Naturality).unwrap();
        assert!(r.passed(), "{:?}", r.failed_identities());
        let lit = horizontal_compose_source_form(&tau, &phi, &tau_out, &phi_out).unwrap();
        assert!(!c.d.mul(&tau_out.tau).mul(&b.d).mul(&tau.tau).is_zero());
        let r = check_two_hom(&lit, &src, &dst, &a, &c, TwoHomReading::Naturality).unwrap();
        assert!(!r.identity_passed("homotopy0"));
    }

    #[test]
    fn categorify_and_back() {
        for (name, s) in two_term_systems() {
            let l = categorify(&s).unwrap();
            let r = check_two_vector(&l).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failed_identities());
            assert_eq!(decategorify(&l).unwrap(), s, "{name}");
            let b = beta(&s).unwrap();
            let r = check_hom(&b, &decategorify(&l).unwrap(), &s).unwrap();
            assert!(r.passed() && b.phi1.inverse().is_some(), "{name}");
            assert!(check_alpha(&l).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn alpha_after_basis_change() {
        let s = sys("sl2/transported");
        let l = categorify(&s).unwrap().change_morphism_basis(&random_invertible(6, 31)).unwrap();
        assert!(check_two_vector(&l).unwrap().passed());
        assert_ne!(alpha(&l), Mat::identity(6));
        assert!(check_alpha(&l).unwrap().passed());
        let back = decategorify(&l).unwrap();
        assert!(check_two_term(&back).passed());
    }

    #[test]
    fn broken_morphism_bracket_is_reported() {
        let mut l = categorify(&sys("sl2/identity-strict")).unwrap();
        l.morphism_bracket.set(&[3, 4, 5], vec![rat(1); 6]);
        let r = check_two_vector(&l).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn strict_side_condition_witness() {
        let mut s = sys("heisenberg/identity-strict");
        s.b001.set(&[0, 1, 2], vec![rat(0), rat(0), rat(5)]);
        let err = strict_to_crossed(&s).unwrap_err().to_string();
        assert!(err.contains("fails"), "{err}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]

        #[test]
        fn transport_preserves_coherence(s0 in 0u64..1000, s1 in 0u64..1000, s2 in 0u64..1000) {
            let a = sys("sl2/identity-strict");
            let (p0, p1, p2) = (random_invertible(3, s0), random_invertible(3, s1), random_phi2(3, 3, s2));
            let b = transport_along(&a, &p0, &p1, &p2).unwrap();
            prop_assert!(check_two_term(&b).passed());
            let f = TwoTermHom::new(p0, p1, p2).unwrap();
            prop_assert!(check_hom(&f, &a, &b).unwrap().passed());
        }

        #[test]
        fn two_hom_target_is_homomorphism(seed in 0u64..1000) {
            let a = sys("sl2/transported");
            let phi = TwoTermHom::identity(&a);
            let tau = random_tau(3, 3, seed);
            let psi = two_hom_target(&tau, &phi, &a, &a).unwrap();
            prop_assert!(check_hom(&psi, &a, &a).unwrap().passed());
        }
    }
}
