//! Small named algebras and representations used by the tests, the examples
//! in the README and the bundled data files.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::{adjoint_unchecked, lts_from_lie, transport_algebra, Algebra, AlgebraKind, Rep};
use crate::cohomology::{find_nonzero_cocycle, LTSCochain};
use crate::exactlin::{rat, Mat, Rat};
use crate::formats::{Document, Payload};
use crate::multilinear::{MultiMap, Space};
use crate::twoterm::{
    categorify, crossed_to_strict, quadruple_to_skeletal, random_phi2, skeletal_to_quadruple, strict_to_crossed,
    transport_along, CrossedModule, Quadruple, TwoTermSystem,
};

fn ternary(kind: AlgebraKind, space: Space, entries: &[([usize; 3], &[i64])]) -> Algebra {
    let d = space.dim();
    let mut m = MultiMap::uniform(d, 3, d);
    for (idx, v) in entries {
        m.set(idx, v.iter().map(|&x| rat(x)).collect());
    }
    Algebra::new(kind, space, m).expect("corpus bracket shape")
}

fn lie(space: Space, entries: &[([usize; 2], &[i64])]) -> Algebra {
    let d = space.dim();
    let mut m = MultiMap::uniform(d, 2, d);
    for (idx, v) in entries {
        let val: Vec<Rat> = v.iter().map(|&x| rat(x)).collect();
        m.set(&[idx[1], idx[0]], val.iter().map(|c| -c).collect());
        m.set(idx, val);
    }
    Algebra::new(AlgebraKind::Lie, space, m).expect("corpus bracket shape")
}

pub fn zero_lts(dim: usize) -> Algebra {
    Algebra::zero(AlgebraKind::Lts, Space::standard(dim))
}

/// sl₂ with basis `h, e, f`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2_lie() -> Algebra {
    let s = Space::from_labels(&["h", "e", "f"]).expect("distinct labels");
    lie(s, &[([0, 1], &[0, 2, 0]), ([0, 2], &[0, 0, -2]), ([1, 2], &[1, 0, 0])])
}

/// `[x,y,z] = [[x,y],z]` on sl₂.
pub fn sl2_lts() -> Algebra {
    lts_from_lie(&sl2_lie()).expect("sl2 is a Lie algebra")
}

/// The two-dimensional nonabelian Lie algebra `[e0,e1] = e1`.
pub fn nonabelian2_lie() -> Algebra {
    lie(Space::standard(2), &[([0, 1], &[0, 1])])
}

pub fn nonabelian2_lts() -> Algebra {
    lts_from_lie(&nonabelian2_lie()).expect("nonabelian Lie algebra")
}

/// Heisenberg Lie algebra `[e0,e1] = e2`.
pub fn heisenberg_lie() -> Algebra {
    lie(Space::standard(3), &[([0, 1], &[0, 0, 1])])
}

pub fn heisenberg_lts() -> Algebra {
    lts_from_lie(&heisenberg_lie()).expect("Heisenberg is a Lie algebra")
}

/// One-dimensional `[e,e,e] = e`; violates the fundamental identity.
pub fn unit_cube_nambu() -> Algebra {
    ternary(AlgebraKind::Nambu, Space::from_labels(&["e"]).expect("label"), &[([0, 0, 0], &[1])])
}

/// A single entry `[e0,e1,e0] = e0` without its antisymmetric partner.
pub fn lone_entry_map() -> Algebra {
    ternary(AlgebraKind::Lts, Space::standard(2), &[([0, 1, 0], &[1, 0])])
}

/// The three-dimensional ternary algebra with totally antisymmetric
/// `[e0,e1,e2] = e0`: satisfies the fundamental identity but not the cyclic one.
pub fn skew_ternary3() -> Algebra {
    let mut entries: Vec<([usize; 3], Vec<i64>)> = Vec::new();
    let perms = [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)];
    for (p, s) in perms {
        entries.push((p, vec![s, 0, 0]));
    }
    let refs: Vec<([usize; 3], &[i64])> = entries.iter().map(|(p, v)| (*p, v.as_slice())).collect();
    ternary(AlgebraKind::Nambu, Space::standard(3), &refs)
}

/// `[x,y,z] = ω(x,y) L z` on a plane, with `ω` the area form. Satisfies the
/// first two axioms for every `L`, and the fundamental identity iff `tr L = 0`.
pub fn area_form_lts(l: [[i64; 2]; 2]) -> Algebra {
    let mut m = MultiMap::uniform(2, 3, 2);
    for z in 0..2 {
        let lz = vec![rat(l[0][z]), rat(l[1][z])];
        m.set(&[1, 0, z], lz.iter().map(|c| -c).collect());
        m.set(&[0, 1, z], lz);
    }
    Algebra::new(AlgebraKind::Lts, Space::standard(2), m).expect("shape")
}

/// An LTS-shaped bracket that fails only the fundamental identity.
pub fn broken_fundamental() -> Algebra {
    area_form_lts([[1, 0], [0, 0]])
}

/// Integer matrix with unit determinant drawn from a seeded generator.
pub fn random_unimodular(n: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Mat::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = rat(rng.gen_range(-2..=2));
        // row_i += c * row_j
        for k in 0..n {
            let v = &m[(i, k)] + &(&c * &m[(j, k)]);
            m[(i, k)] = v;
        }
    }
    m
}

/// Invertible rational matrix drawn from a seeded generator.
pub fn random_invertible(n: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let data: Vec<Rat> = (0..n * n).map(|_| Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect();
        let m = Mat::from_vec(n, n, data).expect("square");
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// sl₂-LTS written in a random basis; an LTS by construction.
pub fn random_sl2_conjugate(seed: u64) -> Algebra {
    let p = random_invertible(3, seed);
    transport_algebra(&sl2_lts(), &p).expect("invertible change of basis")
}

/// Every algebra in the corpus, ternary or binary.
pub fn algebras() -> Vec<Algebra> {
    vec![
        zero_lts(1),
        zero_lts(2),
        zero_lts(3),
        sl2_lts(),
        nonabelian2_lts(),
        heisenberg_lts(),
        unit_cube_nambu(),
        lone_entry_map(),
        skew_ternary3(),
        area_form_lts([[0, 1], [0, 0]]),
        broken_fundamental(),
        random_sl2_conjugate(7),
    ]
}

/// Named Lie triple systems (each passes the axioms).
pub fn lts_algebras() -> Vec<(&'static str, Algebra)> {
    vec![
        ("zero1", zero_lts(1)),
        ("zero2", zero_lts(2)),
        ("zero3", zero_lts(3)),
        ("sl2", sl2_lts()),
        ("nonabelian2", nonabelian2_lts()),
        ("heisenberg", heisenberg_lts()),
        ("area_nilpotent", area_form_lts([[0, 1], [0, 0]])),
        ("sl2_conjugate", random_sl2_conjugate(7)),
    ]
}

pub fn lie_algebras() -> Vec<Algebra> {
    vec![Algebra::zero(AlgebraKind::Lie, Space::standard(2)), sl2_lie(), nonabelian2_lie(), heisenberg_lie()]
}

/// Trivial one-dimensional module (ρ = 0).
pub fn trivial_rep(base: &Algebra) -> Rep {
    Rep::zero(base.clone(), Space::from_labels(&["v"]).expect("label"))
}

/// Module of a Lie-derived LTS induced by a Lie module `σ`: `ρ(x,y) = σ(y)σ(x)`.
pub fn rep_from_lie_module(base: &Algebra, sigma: &[Mat], module: Space) -> Rep {
    Rep::from_matrices(base.clone(), module, |x, y| sigma[y].mul(&sigma[x])).expect("square matrices")
}

/// sl₂-LTS acting on the natural two-dimensional module.
pub fn sl2_natural_rep() -> Rep {
    let h = Mat::from_ints(&[&[1, 0], &[0, -1]]);
    let e = Mat::from_ints(&[&[0, 1], &[0, 0]]);
    let f = Mat::from_ints(&[&[0, 0], &[1, 0]]);
    rep_from_lie_module(&sl2_lts(), &[h, e, f], Space::from_labels(&["v+", "v-"]).expect("labels"))
}

/// Named (LTS, representation) pairs; all satisfy the representation identities.
pub fn rep_pairs() -> Vec<(String, Rep)> {
    let mut out = Vec::new();
    for (name, g) in lts_algebras() {
        out.push((format!("{name}/trivial"), trivial_rep(&g)));
        out.push((format!("{name}/adjoint"), adjoint_unchecked(&g)));
    }
    out.push(("sl2/natural".into(), sl2_natural_rep()));
    out
}

/// Named 2-term systems covering the skeletal, strict and general cases;
/// each satisfies all coherence conditions.
pub fn two_term_systems() -> Vec<(String, TwoTermSystem)> {
    let mut out = Vec::new();
    out.push(("zero".to_string(), TwoTermSystem::zero(Space::standard(1), Space::with_prefix("f", 1))));
    out.push(("sl2/degree0".to_string(), TwoTermSystem::from_algebra(&sl2_lts()).expect("ternary")));
    let g = zero_lts(2);
    let omega = find_nonzero_cocycle(&g, &trivial_rep(&g), 3).expect("cocycles").expect("nonzero cocycle");
    let q = Quadruple { lts: g.clone(), rep: trivial_rep(&g), omega };
    out.push(("zero2/skeletal".to_string(), quadruple_to_skeletal(&q).expect("cocycle")));
    let sl2 = sl2_lts();
    let adj = adjoint_unchecked(&sl2);
    out.push(("sl2/adjoint-skeletal".to_string(), {
        let omega = LTSCochain::zero(3, 3, 3);
        quadruple_to_skeletal(&Quadruple { lts: sl2.clone(), rep: adj, omega }).expect("zero cocycle")
    }));
    let strict = crossed_to_strict(&CrossedModule::identity_adjoint(&sl2)).expect("shapes");
    out.push(("sl2/identity-strict".to_string(), strict.clone()));
    let heis = crossed_to_strict(&CrossedModule::identity_adjoint(&heisenberg_lts())).expect("shapes");
    out.push(("heisenberg/identity-strict".to_string(), heis));
    let general =
        transport_along(&strict, &random_invertible(3, 11), &random_invertible(3, 12), &random_phi2(3, 3, 13))
            .expect("invertible transport");
    out.push(("sl2/transported".to_string(), general));
    out
}

/// The documents bundled under `corpus/`, by file name.
pub fn documents() -> Vec<(String, Document)> {
    let mut out: Vec<(String, Document)> = Vec::new();
    let mut add = |name: &str, p: Payload| out.push((format!("{name}.json"), Document::new(p)));
    add("zero2", Payload::Algebra(zero_lts(2)));
    add("sl2_lts", Payload::Algebra(sl2_lts()));
    add("nonabelian2_lts", Payload::Algebra(nonabelian2_lts()));
    add("heisenberg_lts", Payload::Algebra(heisenberg_lts()));
    add("sl2_conjugate", Payload::Algebra(random_sl2_conjugate(7)));
    add("broken_fundamental", Payload::Algebra(broken_fundamental()));
    add("unit_cube_nambu", Payload::Algebra(unit_cube_nambu()));
    add("skew_ternary3", Payload::Algebra(skew_ternary3()));
    add("sl2_lie", Payload::Algebra(sl2_lie()));
    add("sl2_natural_rep", Payload::Representation(sl2_natural_rep()));
    for (name, s) in two_term_systems() {
        let file = name.replace(['/', '-'], "_");
        if name.ends_with("strict") {
            add(
                &format!("{file}_crossed"),
                Payload::CrossedModule(strict_to_crossed(&s).expect("strict corpus system")),
            );
        }
        if s.is_skeletal() && s.n1() > 0 {
            add(
                &format!("{file}_quadruple"),
                Payload::Quadruple(skeletal_to_quadruple(&s).expect("skeletal corpus system")),
            );
        }
        if name == "sl2/transported" {
            add(&format!("{file}_categorified"), Payload::TwoVectorSystem(categorify(&s).expect("coherent")));
        }
        add(&file, Payload::TwoTermSystem(s));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{check_lts, check_nambu, check_representation};

    #[test]
    fn corpus_classification() {
        for (name, g) in lts_algebras() {
            assert!(check_lts(&g).unwrap().passed(), "{name}");
        }
        assert!(check_nambu(&skew_ternary3()).unwrap().passed());
        assert!(!check_lts(&skew_ternary3().with_kind(AlgebraKind::Lts).unwrap()).unwrap().passed());
        let r = check_lts(&broken_fundamental()).unwrap();
        assert!(r.identity_passed("lts1") && r.identity_passed("lts2") && !r.identity_passed("lts3"));
    }

    #[test]
    fn corpus_reps_are_representations() {
        for (name, r) in rep_pairs() {
            assert!(check_representation(&r).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn random_matrices_are_invertible() {
        for seed in 0..5 {
            assert!(random_unimodular(3, seed).inverse().is_some());
            assert!(random_invertible(3, seed).inverse().is_some());
        }
    }

    #[test]
    fn bundled_files_match_the_corpus() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
        for (name, doc) in documents() {
            let text = std::fs::read_to_string(dir.join(&name)).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(text, crate::formats::emit(&doc), "{name} is stale");
        }
    }
}
