mod common;

use common::word;
use nslen::corpus::{alternating, psl2, symmetric};
use nslen::pncheck::{
    check_pn, pn_certificate_search, validate_certificate, verify_theorem_c, PnCertificate,
    SearchMode, SearchRequest,
};
use nslen::laws::TheoremStatus;
use nslen::{Caps, PermGroup};
use proptest::prelude::*;

fn corpus() -> Vec<PermGroup> {
    vec![alternating(5).unwrap(), symmetric(5).unwrap(), psl2(7).unwrap(), symmetric(4).unwrap()]
}

fn check_certificate(cert: &PnCertificate, g: &PermGroup) -> Result<(), TestCaseError> {
    prop_assert!(validate_certificate(cert, g).is_ok());
    prop_assert!(!cert.word.evaluate(&cert.tuple).unwrap().is_identity());
    let mut stripped = cert.clone();
    stripped.sylow_witness = None;
    prop_assert!(validate_certificate(&stripped, g).is_ok());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn found_certificates_validate(
        gi in 0usize..4,
        w in word(3, 3),
        sylow in any::<bool>(),
        omega in 0usize..5,
        seed in any::<u64>(),
    ) {
        let g = &corpus()[gi];
        let mode = if sylow { SearchMode::Sylow2 } else { SearchMode::Any };
        let req = SearchRequest::new(w.clone(), mode).at(omega % g.degree()).seed(seed);
        let out = pn_certificate_search(g, &req, &Caps::default()).unwrap();
        if let Some(cert) = out.certificate() {
            check_certificate(cert, g)?;
            prop_assert_eq!(cert.omega, omega % g.degree());
            prop_assert_eq!(cert.sylow_witness.is_some(), sylow);
        } else if sylow {
            let any = SearchRequest::new(w, SearchMode::Any).at(omega % g.degree()).seed(seed);
            let wider = pn_certificate_search(g, &any, &Caps::default()).unwrap();
            if let Some(cert) = wider.certificate() {
                check_certificate(cert, g)?;
            }
        }
    }

    #[test]
    fn sylow_success_implies_any_success(gi in 0usize..4, w in word(3, 2), omega in 0usize..5) {
        let g = &corpus()[gi];
        let omega = omega % g.degree();
        let caps = Caps::default();
        let narrow = SearchRequest::new(w.clone(), SearchMode::Sylow2).at(omega);
        let wide = SearchRequest::new(w, SearchMode::Any).at(omega);
        if pn_certificate_search(g, &narrow, &caps).unwrap().certificate().is_some() {
            prop_assert!(pn_certificate_search(g, &wide, &caps).unwrap().certificate().is_some());
        }
    }
}

#[test]
fn theorem_c_pass_implies_pn_pass() {
    let caps = Caps::default();
    for g in [alternating(5).unwrap(), psl2(7).unwrap(), psl2(8).unwrap()] {
        let c = verify_theorem_c(&g, &caps, 3);
        assert_eq!(c.status, TheoremStatus::Pass);
        for cert in c.certificates() {
            validate_certificate(cert, &g).unwrap();
            assert!(!cert.word.evaluate(&cert.tuple).unwrap().is_identity());
        }
        for mode in [SearchMode::Sylow2, SearchMode::Any] {
            let p = check_pn(&g, c.n, mode, None, &caps, 3);
            assert_eq!(p.status, TheoremStatus::Pass, "{:?} {mode}", g.name());
        }
    }
}
