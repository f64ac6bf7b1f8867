//! Parsing and canonical emission of the bundled documents.

use std::path::Path;

use trisys_core::algebras::check_lts;
use trisys_core::formats::{canonicalize, emit, parse, read_document, Payload};
use trisys_core::{corpus, Error};

fn corpus_file(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

#[test]
fn sl2_document_matches_the_corpus_algebra() {
    let doc = read_document(&corpus_file("sl2_lts.json")).unwrap();
    let Payload::Algebra(a) = &doc.payload else { panic!("not an algebra") };
    assert_eq!(a, &corpus::sl2_lts());
    assert!(check_lts(a).unwrap().passed());
    // [e,f,e] = [[e,f],e] = [h,e] = 2e
    let (e, f) = (a.space.index_of("e").unwrap(), a.space.index_of("f").unwrap());
    assert_eq!(a.bracket_basis(&[e, f, e])[e], trisys_core::rat(2));
    assert_eq!(parse(&emit(&doc)).unwrap(), doc);
}

#[test]
fn every_bundled_file_is_canonical() {
    for entry in std::fs::read_dir(corpus_file("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(canonicalize(&text).unwrap(), text, "{}", path.display());
    }
}

#[test]
fn canonicalization_is_idempotent() {
    let messy = r#"{"kind":"algebra","version":"1","payload":{"bracket":{"entries":[
        {"args":[1,0,1],"value":{"e1":"-2/4","e0":0}},
        {"args":[0,1,1],"value":{"e1":"1/2"}}],"arity":3},"kind":"lts","basis":["e0","e1"],"dimension":2}}"#;
    let once = canonicalize(messy).unwrap();
    assert_eq!(canonicalize(&once).unwrap(), once);
    assert!(once.contains("\"-1/2\""));
    assert!(!once.contains("\"e0\": 0"));
}

#[test]
fn validation_errors_carry_paths() {
    let text = std::fs::read_to_string(corpus_file("sl2_natural_rep.json")).unwrap();
    let broken = text.replacen("\"module_dimension\": 2", "\"module_dimension\": 3", 1);
    match parse(&broken) {
        Err(Error::Validation { path, .. }) => assert_eq!(path, "$.payload.module_basis"),
        other => panic!("{other:?}"),
    }
    let missing = r#"{"version":"1","kind":"two_term_system","payload":{"t0_dim":1}}"#;
    match parse(missing) {
        Err(Error::Validation { path, .. }) => assert_eq!(path, "$.payload.t1_dim"),
        other => panic!("{other:?}"),
    }
    let extra = r#"{"version":"1","kind":"algebra","payload":{},"note":1}"#;
    match parse(extra) {
        Err(Error::Validation { path, .. }) => assert_eq!(path, "$.note"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unconstrained_cochain_is_rejected() {
    let text = r#"{"version":"1","kind":"cochain","payload":{"degree":2,"dimension":1,"basis":["e"],
        "module_dimension":1,"module_basis":["v"],"entries":[{"args":[0,0,0],"value":{"v":1}}]}}"#;
    match parse(text) {
        Err(Error::Validation { path, .. }) => assert_eq!(path, "$.payload.entries"),
        other => panic!("{other:?}"),
    }
}
