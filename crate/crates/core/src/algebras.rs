//! Leibniz, Lie, Nambu and Lie triple system structures given by structure
//! constants, their representations, and exact identity checkers.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{vec_add, Mat, Rat};
use crate::multilinear::{Arg, MultiMap, Space, Tuples};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Leibniz,
    Lie,
    Nambu,
    Lts,
}

impl AlgebraKind {
    pub fn arity(self) -> usize {
        match self {
            AlgebraKind::Leibniz | AlgebraKind::Lie => 2,
            AlgebraKind::Nambu | AlgebraKind::Lts => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Leibniz => "leibniz",
            AlgebraKind::Lie => "lie",
            AlgebraKind::Nambu => "nambu",
            AlgebraKind::Lts => "lts",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "leibniz" => Some(AlgebraKind::Leibniz),
            "lie" => Some(AlgebraKind::Lie),
            "nambu" => Some(AlgebraKind::Nambu),
            "lts" => Some(AlgebraKind::Lts),
            _ => None,
        }
    }

    pub fn is_ternary(self) -> bool {
        self.arity() == 3
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vector space with a binary or ternary bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub kind: AlgebraKind,
    pub space: Space,
    pub structure: MultiMap,
}

impl Algebra {
    pub fn new(kind: AlgebraKind, space: Space, structure: MultiMap) -> Result<Self> {
        let d = space.dim();
        if structure.arity() != kind.arity() {
            return Err(Error::usage(format!(
                "{kind} bracket must have arity {}, got {}",
                kind.arity(),
                structure.arity()
            )));
        }
        if structure.dims().iter().any(|&x| x != d) || structure.codim() != d {
            return Err(Error::usage("bracket dimensions do not match the space"));
        }
        Ok(Algebra { kind, space, structure })
    }

    pub fn zero(kind: AlgebraKind, space: Space) -> Self {
        let d = space.dim();
        let structure = MultiMap::uniform(d, kind.arity(), d);
        Algebra { kind, space, structure }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Same structure constants under a different kind tag.
    pub fn with_kind(&self, kind: AlgebraKind) -> Result<Self> {
        Algebra::new(kind, self.space.clone(), self.structure.clone())
    }

    /// Bracket of arbitrary arguments.
    pub fn bracket(&self, args: &[Arg<'_>]) -> Vec<Rat> {
        self.structure.eval(args).expect("bracket arguments match the algebra")
    }

    /// Bracket of basis elements.
    pub fn bracket_basis(&self, idx: &[usize]) -> Vec<Rat> {
        self.structure.value(idx)
    }

    fn require(&self, allowed: &[AlgebraKind], op: &str) -> Result<()> {
        if allowed.contains(&self.kind) {
            Ok(())
        } else {
            Err(Error::usage(format!("{op} does not apply to an algebra of kind {}", self.kind)))
        }
    }

    fn labels_of(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.space.label(i).to_string()).collect()
    }
}

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub witness: Vec<usize>,
    pub witness_labels: Vec<String>,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
}

/// Outcome of an exact identity check: every identity that was tested and
/// every violation found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub identities: Vec<String>,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn identity_passed(&self, name: &str) -> bool {
        !self.violations.iter().any(|v| v.identity == name)
    }

    pub fn failed_identities(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.identity) {
                out.push(v.identity.clone());
            }
        }
        out
    }

    pub fn begin(&mut self, identity: &str) {
        if !self.identities.iter().any(|i| i == identity) {
            self.identities.push(identity.to_string());
        }
    }

    /// Records a violation when `lhs != rhs`.
    pub fn compare(&mut self, identity: &str, witness: &[usize], labels: Vec<String>, lhs: Vec<Rat>, rhs: Vec<Rat>) {
        if lhs != rhs {
            self.violations.push(Violation {
                identity: identity.to_string(),
                witness: witness.to_vec(),
                witness_labels: labels,
                lhs,
                rhs,
            });
        }
    }

    /// Appends another report, prefixing its identity names.
    pub fn merge(&mut self, prefix: &str, other: CheckReport) {
        let name = |s: &str| if prefix.is_empty() { s.to_string() } else { format!("{prefix}:{s}") };
        for i in other.identities {
            self.begin(&name(&i));
        }
        for mut v in other.violations {
            v.identity = name(&v.identity);
            self.violations.push(v);
        }
    }
}

/// Leibniz identity `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` on all basis triples.
/// Lie algebras are also accepted.
pub fn check_leibniz(a: &Algebra) -> Result<CheckReport> {
    a.require(&[AlgebraKind::Leibniz, AlgebraKind::Lie], "check_leibniz")?;
    let mut rep = CheckReport::new();
    rep.begin("leibniz");
    for t in Tuples::uniform(a.dim(), 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let yz = a.bracket_basis(&[y, z]);
        let xy = a.bracket_basis(&[x, y]);
        let xz = a.bracket_basis(&[x, z]);
        let lhs = a.bracket(&[Arg::Basis(x), Arg::Vector(&yz)]);
        let rhs =
            vec_add(&a.bracket(&[Arg::Vector(&xy), Arg::Basis(z)]), &a.bracket(&[Arg::Basis(y), Arg::Vector(&xz)]));
        rep.compare("leibniz", &t, a.labels_of(&t), lhs, rhs);
    }
    Ok(rep)
}

/// Leibniz identity plus antisymmetry of the bracket.
pub fn check_lie(a: &Algebra) -> Result<CheckReport> {
    a.require(&[AlgebraKind::Lie], "check_lie")?;
    let mut rep = check_leibniz(a)?;
    rep.begin("antisymmetry");
    for t in Tuples::uniform(a.dim(), 2) {
        let lhs = a.bracket_basis(&t);
        let rhs = a.bracket_basis(&[t[1], t[0]]).iter().map(|c| -c).collect();
        rep.compare("antisymmetry", &t, a.labels_of(&t), lhs, rhs);
    }
    Ok(rep)
}

fn fundamental_identity(a: &Algebra, rep: &mut CheckReport, name: &str) {
    rep.begin(name);
    for t in Tuples::uniform(a.dim(), 5) {
        let (x, y, z, w, u) = (t[0], t[1], t[2], t[3], t[4]);
        let zwu = a.bracket_basis(&[z, w, u]);
        let xyz = a.bracket_basis(&[x, y, z]);
        let xyw = a.bracket_basis(&[x, y, w]);
        let xyu = a.bracket_basis(&[x, y, u]);
        let lhs = a.bracket(&[Arg::Basis(x), Arg::Basis(y), Arg::Vector(&zwu)]);
        let mut rhs = a.bracket(&[Arg::Vector(&xyz), Arg::Basis(w), Arg::Basis(u)]);
        rhs = vec_add(&rhs, &a.bracket(&[Arg::Basis(z), Arg::Vector(&xyw), Arg::Basis(u)]));
        rhs = vec_add(&rhs, &a.bracket(&[Arg::Basis(z), Arg::Basis(w), Arg::Vector(&xyu)]));
        rep.compare(name, &t, a.labels_of(&t), lhs, rhs);
    }
}

/// Fundamental identity `[x,y,[z,w,u]] = [[x,y,z],w,u] + [z,[x,y,w],u] + [z,w,[x,y,u]]`
/// on all basis 5-tuples.
pub fn check_nambu(a: &Algebra) -> Result<CheckReport> {
    a.require(&[AlgebraKind::Nambu, AlgebraKind::Lts], "check_nambu")?;
    let mut rep = CheckReport::new();
    fundamental_identity(a, &mut rep, "fundamental");
    Ok(rep)
}

/// The three Lie triple system axioms: antisymmetry in the first two slots
/// (`lts1`), the cyclic identity (`lts2`) and the fundamental identity (`lts3`).
pub fn check_lts(a: &Algebra) -> Result<CheckReport> {
    a.require(&[AlgebraKind::Lts], "check_lts")?;
    Ok(lts_axioms(a))
}

fn lts_axioms(a: &Algebra) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.begin("lts1");
    for t in Tuples::uniform(a.dim(), 3) {
        let lhs = a.bracket_basis(&t);
        let rhs = a.bracket_basis(&[t[1], t[0], t[2]]).iter().map(|c| -c).collect();
        rep.compare("lts1", &t, a.labels_of(&t), lhs, rhs);
    }
    rep.begin("lts2");
    for t in Tuples::uniform(a.dim(), 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s =
            vec_add(&vec_add(&a.bracket_basis(&[x, y, z]), &a.bracket_basis(&[y, z, x])), &a.bracket_basis(&[z, x, y]));
        let zero = vec![Rat::zero(); a.dim()];
        rep.compare("lts2", &t, a.labels_of(&t), s, zero);
    }
    fundamental_identity(a, &mut rep, "lts3");
    rep
}

/// Whether the ternary bracket satisfies the Lie triple system axioms,
/// regardless of its kind tag.
pub fn satisfies_lts(a: &Algebra) -> bool {
    a.kind.is_ternary() && lts_axioms(a).passed()
}

/// A representation `ρ: g ⊗ g → End(V)` of a Lie triple system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub base: Algebra,
    pub space: Space,
    /// Bilinear on the base; values are row-major `dim V × dim V` matrices.
    pub rho: MultiMap,
}

impl Rep {
    pub fn new(base: Algebra, space: Space, rho: MultiMap) -> Result<Self> {
        let d = base.dim();
        let m = space.dim();
        if rho.dims() != [d, d] || rho.codim() != m * m {
            return Err(Error::usage("representation map has the wrong shape"));
        }
        Ok(Rep { base, space, rho })
    }

    pub fn zero(base: Algebra, space: Space) -> Self {
        let d = base.dim();
        let m = space.dim();
        Rep { base, space, rho: MultiMap::uniform(d, 2, m * m) }
    }

    /// Builds ρ from a function returning the matrix of `ρ(e_i, e_j)`.
    pub fn from_matrices(base: Algebra, space: Space, f: impl Fn(usize, usize) -> Mat) -> Result<Self> {
        let d = base.dim();
        let m = space.dim();
        let mut rho = MultiMap::uniform(d, 2, m * m);
        for i in 0..d {
            for j in 0..d {
                let mat = f(i, j);
                if mat.rows() != m || mat.cols() != m {
                    return Err(Error::usage("representation matrix has the wrong size"));
                }
                rho.set(&[i, j], mat.data().to_vec());
            }
        }
        Ok(Rep { base, space, rho })
    }

    pub fn module_dim(&self) -> usize {
        self.space.dim()
    }

    fn to_mat(&self, v: Vec<Rat>) -> Mat {
        let m = self.module_dim();
        Mat::from_vec(m, m, v).expect("representation values are square matrices")
    }

    /// Matrix of `ρ(e_i, e_j)`.
    pub fn matrix(&self, i: usize, j: usize) -> Mat {
        self.to_mat(self.rho.value(&[i, j]))
    }

    /// Matrix of `ρ(x, y)` for arbitrary arguments.
    pub fn matrix_at(&self, x: Arg<'_>, y: Arg<'_>) -> Mat {
        self.to_mat(self.rho.eval(&[x, y]).expect("representation arguments match the base"))
    }

    /// `ρ(x, y) v` on basis elements `x, y` of the base.
    pub fn act(&self, i: usize, j: usize, v: &[Rat]) -> Vec<Rat> {
        self.matrix(i, j).mul_vec(v)
    }
}

/// Both representation identities as matrix equations on all basis 4-tuples:
///
/// `rep1`: `[ρ(x2,x1) − ρ(x1,x2), ρ(y1,y2)] = ρ([x1,x2,y1],y2) + ρ(y1,[x1,x2,y2])`
///
/// `rep2`: `ρ(x1,[y1,y2,y3]) = ρ(y2,y3)ρ(x1,y1) − ρ(y1,y3)ρ(x1,y2) + (ρ(y2,y1) − ρ(y1,y2))ρ(x1,y3)`
pub fn check_representation(r: &Rep) -> Result<CheckReport> {
    let base_report = check_lts(&r.base)?;
    if !base_report.passed() {
        return Err(Error::precondition("the base of the representation is not a Lie triple system"));
    }
    Ok(representation_identities(r))
}

/// The representation identities without the base precondition.
pub fn representation_identities(r: &Rep) -> CheckReport {
    let d = r.base.dim();
    let mats: Vec<Vec<Mat>> = (0..d).map(|i| (0..d).map(|j| r.matrix(i, j)).collect()).collect();
    let g = &r.base;
    let mut rep = CheckReport::new();
    rep.begin("rep1");
    for t in Tuples::uniform(d, 4) {
        let (x1, x2, y1, y2) = (t[0], t[1], t[2], t[3]);
        let lhs = mats[x2][x1].sub(&mats[x1][x2]).commutator(&mats[y1][y2]);
        let b1 = g.bracket_basis(&[x1, x2, y1]);
        let b2 = g.bracket_basis(&[x1, x2, y2]);
        let rhs = r.matrix_at(Arg::Vector(&b1), Arg::Basis(y2)).add(&r.matrix_at(Arg::Basis(y1), Arg::Vector(&b2)));
        rep.compare("rep1", &t, g.labels_of(&t), lhs.data().to_vec(), rhs.data().to_vec());
    }
    rep.begin("rep2");
    for t in Tuples::uniform(d, 4) {
        let (x1, y1, y2, y3) = (t[0], t[1], t[2], t[3]);
        let b = g.bracket_basis(&[y1, y2, y3]);
        let lhs = r.matrix_at(Arg::Basis(x1), Arg::Vector(&b));
        let rhs = mats[y2][y3]
            .mul(&mats[x1][y1])
            .sub(&mats[y1][y3].mul(&mats[x1][y2]))
            .add(&mats[y2][y1].sub(&mats[y1][y2]).mul(&mats[x1][y3]));
        rep.compare("rep2", &t, g.labels_of(&t), lhs.data().to_vec(), rhs.data().to_vec());
    }
    rep
}

/// The adjoint representation `ad_{x,y} z = [z, x, y]` on the algebra itself.
pub fn adjoint_rep(a: &Algebra) -> Result<Rep> {
    a.require(&[AlgebraKind::Lts], "adjoint_rep")?;
    Ok(adjoint_unchecked(a))
}

pub(crate) fn adjoint_unchecked(a: &Algebra) -> Rep {
    let d = a.dim();
    Rep::from_matrices(a.clone(), a.space.clone(), |x, y| {
        let cols: Vec<Vec<Rat>> = (0..d).map(|z| a.bracket_basis(&[z, x, y])).collect();
        Mat::from_columns(d, &cols)
    })
    .expect("adjoint matrices are square")
}

/// The Leibniz algebra on `g ⊗ g` with
/// `[x⊗y, z⊗w] = [x,y,z]⊗w + z⊗[x,y,w]`.
pub fn induced_leibniz(a: &Algebra) -> Result<Algebra> {
    a.require(&[AlgebraKind::Nambu, AlgebraKind::Lts], "induced_leibniz")?;
    let d = a.dim();
    let space = a.space.tensor_square();
    let structure = MultiMap::from_fn(vec![d * d, d * d], d * d, |t| {
        let (x, y) = (t[0] / d, t[0] % d);
        let (z, w) = (t[1] / d, t[1] % d);
        let mut out = vec![Rat::zero(); d * d];
        for (c, v) in a.bracket_basis(&[x, y, z]).iter().enumerate() {
            out[c * d + w] += v;
        }
        for (c, v) in a.bracket_basis(&[x, y, w]).iter().enumerate() {
            out[z * d + c] += v;
        }
        out
    });
    Algebra::new(AlgebraKind::Leibniz, space, structure)
}

/// The Lie triple system `[x,y,z] = [[x,y],z]` of a Lie algebra.
pub fn lts_from_lie(lie: &Algebra) -> Result<Algebra> {
    let report = check_lie(lie)?;
    if !report.passed() {
        return Err(Error::precondition(format!(
            "input is not a Lie algebra (failed: {})",
            report.failed_identities().join(", ")
        )));
    }
    let d = lie.dim();
    let structure = MultiMap::from_fn(vec![d, d, d], d, |t| {
        let xy = lie.bracket_basis(&[t[0], t[1]]);
        lie.bracket(&[Arg::Vector(&xy), Arg::Basis(t[2])])
    });
    Algebra::new(AlgebraKind::Lts, lie.space.clone(), structure)
}

/// Image of a ternary or binary bracket under a change of basis `p`
/// (columns are the new basis in old coordinates): `π'(u,v,w) = p⁻¹ π(pu,pv,pw)`.
pub fn transport_algebra(a: &Algebra, p: &Mat) -> Result<Algebra> {
    let pinv = p.inverse().ok_or_else(|| Error::usage("change of basis is not invertible"))?;
    let d = a.dim();
    let cols: Vec<Vec<Rat>> = (0..d).map(|i| p.column(i)).collect();
    let structure = MultiMap::from_fn(vec![d; a.kind.arity()], d, |t| {
        let args: Vec<Arg<'_>> = t.iter().map(|&i| Arg::Vector(&cols[i])).collect();
        pinv.mul_vec(&a.bracket(&args))
    });
    Algebra::new(a.kind, a.space.clone(), structure)
}

/// `ρ'(u,v) = q⁻¹ ρ(pu, pv) q` for base change `p` and module change `q`.
pub fn transport_rep(r: &Rep, base: &Algebra, p: &Mat, q: &Mat) -> Result<Rep> {
    let qinv = q.inverse().ok_or_else(|| Error::usage("module change of basis is not invertible"))?;
    let d = r.base.dim();
    let cols: Vec<Vec<Rat>> = (0..d).map(|i| p.column(i)).collect();
    Rep::from_matrices(base.clone(), r.space.clone(), |i, j| {
        qinv.mul(&r.matrix_at(Arg::Vector(&cols[i]), Arg::Vector(&cols[j]))).mul(q)
    })
}
