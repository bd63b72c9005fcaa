use proptest::prelude::*;
use square_nodal::spectrum::{
    counting_function, courant_audit, courant_sharp_candidates, enumerate_spectrum,
    pleijel_lower_bound,
};

#[test]
fn pleijel_inequality_at_every_eigenvalue() {
    for e in enumerate_spectrum(400.0_f64).unwrap() {
        let lam = e.eigenvalue as f64;
        assert!(counting_function(lam) as f64 > pleijel_lower_bound(lam), "lambda = {lam}");
    }
}

#[test]
fn counting_function_matches_enumeration() {
    let entries = enumerate_spectrum(200.0_f64).unwrap();
    for e in &entries {
        let below = entries.iter().filter(|f| f.eigenvalue < e.eigenvalue).count();
        assert_eq!(counting_function(e.eigenvalue as f64), below);
        let prefix = entries
            .iter()
            .filter(|f| f.eigenvalue == e.eigenvalue && f.k < e.k)
            .count();
        assert_eq!(counting_function(e.eigenvalue as f64), e.k - 1 - prefix);
    }
}

#[test]
fn audit_flags_candidates_consistently() {
    for a in courant_audit(100.0, 68).unwrap() {
        if a.candidate {
            assert!(a.is_first_of_cluster && a.faber_krahn_pass && a.eigenvalue <= 68);
        }
    }
    assert!(!courant_sharp_candidates().contains(&3));
}

proptest! {
    #[test]
    fn ranks_are_consecutive(max in 2.0f64..500.0) {
        let e = enumerate_spectrum(max).unwrap();
        for (i, x) in e.iter().enumerate() {
            prop_assert_eq!(x.k, i + 1);
            prop_assert!(x.eigenvalue as f64 <= max);
        }
        for w in e.windows(2) {
            prop_assert!(w[0].eigenvalue <= w[1].eigenvalue);
            if w[0].eigenvalue == w[1].eigenvalue {
                prop_assert_eq!(&w[0].modes, &w[1].modes);
            }
        }
    }
}
