#![allow(clippy::excessive_precision)]

use ebloch::dilog::{li2, log_one_minus, principal_log, CutPoint, Side};
use ebloch::HighPrecision;
use num_complex::Complex;
use proptest::prelude::*;
use std::f64::consts::PI;

/// Reference values computed with mpmath at 40 digits.
const TABLE: &[(f64, f64, Side, f64, f64)] = &[
    (0.3, 0.0, Side::Interior, 0.32612951007547605633, 0.0),
    (0.5, 0.0, Side::Interior, 0.5822405264650125059, 0.0),
    (-0.7, 0.2, Side::Interior, -0.60999206858506690362, 0.15134442208846015407),
    (0.9, 0.4, Side::Interior, 1.018274783210708985, 0.7633582459821352899),
    (0.1, -0.05, Side::Interior, 0.10189951285005946, -0.052662683675316311756),
    (-3.5, 1.25, Side::Interior, -2.2073701922370706039, 0.53093049220752761478),
    (2.5, -0.75, Side::Interior, 1.5543470630580772606, -2.8711287291764341651),
    (0.5, 0.8660254037844386, Side::Interior, 0.27415567780803776568, 1.0149416064096535795),
    (1.0, 1.0, Side::Interior, 0.61685027506808491368, 1.4603621167531195477),
    (-0.999, 0.001, Side::Interior, -0.82177388628901121522, 0.00069334037317195028541),
    (0.49, 0.49, Side::Interior, 0.44698489783796492701, 0.62810285743583804937),
    (12.0, 3.0, Side::Interior, -0.69282918898312674179, 7.3060369323162466158),
    (-40.0, -7.0, Side::Interior, -8.4654789312337061787, -0.64588971408578947025),
    (0.999, 0.001, Side::Interior, 1.6365867056775252129, 0.0067828498277161498759),
    (0.6, -0.6, Side::Interior, 0.51602579621774985423, -0.8045275394114685962),
    (1e-08, 2e-08, Side::Interior, 9.999999924999998987e-9, 2.0000000100000000196e-8),
    (2.0, 0.0, Side::Above, 2.4674011002723396547, 2.1775860903036021305),
    (2.0, 0.0, Side::Below, 2.4674011002723396547, -2.1775860903036021305),
    (-2.0, 0.0, Side::Above, -1.4367463668836809464, 0.0),
    (-2.0, 0.0, Side::Below, -1.4367463668836809464, 0.0),
    (7.5, 0.0, Side::Above, 1.1218882785470284829, 6.3300045270314632129),
    (1.5, 0.0, Side::Below, 2.3743952702724802007, -1.2738062049196005309),
    (-0.25, 0.0, Side::Above, -0.23590029768626345382, 0.0),
];

#[test]
fn matches_reference_table() {
    for &(re, im, side, vre, vim) in TABLE {
        let v = li2(&CutPoint::new(Complex::new(re, im), side).unwrap());
        let expect = Complex::new(vre, vim);
        let rel = (v - expect).norm() / expect.norm();
        assert!(rel <= 1e-13, "Li2({re}+{im}i {side}) = {v}, expected {expect}, rel {rel:e}");
    }
}

/// 72-digit reference values.
const HP_TABLE: &[(f64, f64, &str, &str)] = &[
    (0.375, 0.25,
     "0.389784372892633744318709578469527396875184467485089610493024988855396955",
     "0.30865106121979894257229016185824550974541418381840739225758765783071992"),
    (-2.5, 0.125,
     "-1.69956868575225173701770296020009061135204801744069496753378173034772144",
     "0.062626347171341029029101724574342083195791066863949910408076069098815732"),
    (0.75, -0.5,
     "0.748963430243851017997908117703211370508928087531951735325963136304341458",
     "-0.779370852254580594623215955326400908877694093068011816375816427218661969"),
    (3.0, 2.0,
     "0.555733628405506931027993620136498197703661128705064767614812243460421072",
     "3.44910680394598473160557359611898314071896724173612467484203975025630846"),
    (0.5, 0.0,
     "0.582240526465012505902656320159680108744198474806126425434347047873171044",
     "0.0"),
];

#[test]
fn high_precision_matches_reference_table() {
    for &(re, im, vre, vim) in HP_TABLE {
        let z = Complex::new(HighPrecision::from(re), HighPrecision::from(im));
        let v = li2(&CutPoint::interior(z).unwrap());
        let expect = Complex::new(vre.parse::<HighPrecision>().unwrap(), vim.parse::<HighPrecision>().unwrap());
        let d = v - expect;
        let err = (d.re * d.re + d.im * d.im).sqrt();
        assert!(err < HighPrecision::from(1e-60), "Li2({re}+{im}i) error {err:e}");
    }
}

#[test]
fn small_argument_series() {
    // |z| ≤ ½: direct power series as oracle
    for k in 0..40 {
        let t = k as f64 * 0.157;
        let z = Complex::from_polar(0.5 * (k as f64 / 40.0).sqrt(), t);
        if z.im == 0.0 && z.re <= 0.0 {
            continue;
        }
        let series: Complex<f64> = (1..=200).map(|n| z.powi(n) / (n * n) as f64).sum();
        let v = li2(&CutPoint::interior(z).unwrap());
        assert!((v - series).norm() <= 1e-13, "{z}");
    }
}

#[test]
fn logs_and_jumps_at_sample_points() {
    let i = CutPoint::interior(Complex::new(0.0, 1.0)).unwrap();
    assert!((principal_log(&i) - Complex::new(0.0, PI / 2.0)).norm() < 1e-16);
    let a = CutPoint::real(-2.0, Side::Above).unwrap();
    let b = CutPoint::real(-2.0, Side::Below).unwrap();
    assert_eq!(principal_log(&a), Complex::new(2f64.ln(), PI));
    assert_eq!(principal_log(&b), Complex::new(2f64.ln(), -PI));
    let h = CutPoint::interior(Complex::new(0.5, 0.0)).unwrap();
    assert!((log_one_minus(&h) - Complex::new(-(2f64.ln()), 0.0)).norm() < 1e-16);
    let two_a = CutPoint::real(2.0, Side::Above).unwrap();
    let two_b = CutPoint::real(2.0, Side::Below).unwrap();
    assert_eq!(log_one_minus(&two_a), Complex::new(0.0, -PI));
    assert!((li2(&two_a) - li2(&two_b) - Complex::new(0.0, 2.0 * PI * 2f64.ln())).norm() < 1e-14);
}

fn interior() -> impl Strategy<Value = Complex<f64>> {
    (-4.0f64..4.0, -4.0f64..4.0)
        .prop_filter("off the cuts", |(re, im)| *im != 0.0 || (*re > 0.0 && *re < 1.0))
        .prop_map(|(re, im)| Complex::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reflection(z in interior()) {
        let p = CutPoint::interior(z).unwrap();
        let q = CutPoint::interior(Complex::new(1.0, 0.0) - z).unwrap();
        let lhs = li2(&p) + li2(&q);
        let rhs = Complex::new(PI * PI / 6.0, 0.0) - principal_log(&p) * log_one_minus(&p);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()), "{} vs {}", lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn jump_right_cut(x in 1.0001f64..50.0) {
        let a = CutPoint::real(x, Side::Above).unwrap();
        let b = CutPoint::real(x, Side::Below).unwrap();
        let lnx = Complex::new(x.ln(), 0.0);
        let tpi = Complex::new(0.0, 2.0 * PI);
        prop_assert!((li2(&a) - li2(&b) - tpi * lnx).norm() <= 1e-12);
        prop_assert!((log_one_minus(&a) - log_one_minus(&b) + tpi).norm() <= 1e-12);
        prop_assert_eq!(principal_log(&a), principal_log(&b));
    }

    #[test]
    fn jump_left_cut(x in -50.0f64..-0.0001) {
        let a = CutPoint::real(x, Side::Above).unwrap();
        let b = CutPoint::real(x, Side::Below).unwrap();
        let tpi = Complex::new(0.0, 2.0 * PI);
        prop_assert!((li2(&a) - li2(&b)).norm() <= 1e-12);
        prop_assert!((principal_log(&a) - principal_log(&b) - tpi).norm() <= 1e-12);
        prop_assert_eq!(log_one_minus(&a), log_one_minus(&b));
    }

    #[test]
    fn boundary_is_the_limit_from_its_side(x in prop_oneof![-20.0f64..-0.1, 1.1f64..20.0]) {
        let eps = 1e-12;
        for (side, im) in [(Side::Above, eps), (Side::Below, -eps)] {
            let b = li2(&CutPoint::real(x, side).unwrap());
            let near = li2(&CutPoint::interior(Complex::new(x, im)).unwrap());
            prop_assert!((b - near).norm() <= 1e-9, "{} {}: {} vs {}", x, side, b, near);
        }
    }
}
