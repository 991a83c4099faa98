mod common;

use proptest::prelude::*;

use knot_shadow::enumerate::enumerate_shadows;
use knot_shadow::standard::{figure_eight, trefoil};
use knot_shadow::{canonical_code, emit_gauss, emit_mapcode, parse_gauss, parse_mapcode, CodeError, ShadowError};

#[test]
fn known_words() {
    assert_eq!(canonical_code(&parse_gauss("gauss: 1+ 2+ 3+ 1+ 2+ 3+").unwrap()), canonical_code(&trefoil()));
    assert_eq!(canonical_code(&parse_gauss("gauss: 1+ 1+").unwrap()), canonical_code(&figure_eight()));
    assert!(parse_gauss("gauss: -").unwrap().is_trivial());
    assert_eq!(parse_gauss("gauss:").unwrap_err().name(), "SyntaxError");
}

#[test]
fn rejects_bad_codes() {
    let name = |r: Result<_, CodeError>| r.unwrap_err().name();
    assert_eq!(name(parse_gauss("gauss: 1+ 2+ 1+ 2+")), "NotSphere");
    assert_eq!(name(parse_gauss("gauss: 1+ 2+ 1+")), "LabelCountError");
    assert_eq!(name(parse_gauss("gauss: 1+ 1-")), "SignMismatch");
    assert_eq!(name(parse_mapcode("shadow v=1 alpha=0-1")), "NotInvolution");
    assert_eq!(name(parse_mapcode("shadow v=1 alpha=0-0,1-2,3-3")), "FixedPointDart");
    assert_eq!(name(parse_mapcode("shadow v=1 alpha=0-x")), "SyntaxError");
    assert!(matches!(
        parse_mapcode("shadow v=2 alpha=0-1,2-3,4-5,6-7"),
        Err(CodeError::Invalid(ShadowError::Disconnected))
    ));
}

#[test]
fn catalog_mapcodes_round_trip() {
    let cat = enumerate_shadows(6);
    for n in 0..=6 {
        for e in cat.stratum(n).values() {
            assert_eq!(parse_mapcode(&emit_mapcode(&e.rep)).unwrap(), e.rep);
        }
    }
}

#[test]
fn gauss_round_trip_small() {
    let cat = enumerate_shadows(4);
    for n in 0..=4 {
        for (code, e) in cat.stratum(n) {
            let back = parse_gauss(&emit_gauss(&e.rep)).unwrap();
            assert_eq!(&canonical_code(&back), code);
        }
    }
}

proptest! {
    #[test]
    fn mapcode_is_labeled_identity(s in common::shadows(8), seed in any::<u64>()) {
        let r = common::random_relabel(&s, seed);
        prop_assert_eq!(parse_mapcode(&emit_mapcode(&r)).unwrap(), r);
    }

    #[test]
    fn canonical_code_ignores_labels(s in common::shadows(8), seed in any::<u64>()) {
        let r = common::random_relabel(&s, seed);
        prop_assert_eq!(canonical_code(&r), canonical_code(&s));
        prop_assert_eq!(canonical_code(&r.mirror()), canonical_code(&s));
    }

    #[test]
    fn gauss_preserves_class(s in common::shadows(8)) {
        prop_assert_eq!(canonical_code(&parse_gauss(&emit_gauss(&s)).unwrap()), canonical_code(&s));
    }

    #[test]
    fn canonical_text_round_trips(s in common::shadows(8)) {
        let c = canonical_code(&s);
        prop_assert_eq!(c.to_string().parse::<knot_shadow::CanonicalCode>().unwrap(), c);
    }
}
