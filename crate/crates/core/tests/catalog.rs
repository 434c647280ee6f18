use std::f64::consts::PI;

use hyperlaplace::catalog::formulas::{self as fm, printed};
use hyperlaplace::catalog::verify::verify_default;
use hyperlaplace::catalog::{
    catalog, entry_i, entry_ii, entry_iii, entry_iv, integer_power_transform, laplace_spectral, novel_v, novel_vi,
    novel_vii, product_transform, special_case, verify_entry, ParamSet, PointStatus,
};
use hyperlaplace::quadrature::{integrate_profiled, Profile};
use hyperlaplace::spectral::{expand_power, Family, FunctionKind, SpectralForm};
use hyperlaplace::special::{beta, Complex};
use hyperlaplace::Error;
use proptest::prelude::*;

fn c(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

fn rel(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / b.norm()
}

fn oracle(id: &str, p: &ParamSet) -> Complex {
    catalog().get(id).unwrap().oracle(p, 1e-11).unwrap().value
}

#[test]
fn laplace_spectral_examples() {
    let one = SpectralForm::constant(Family::Circular, 1.0);
    assert!(rel(laplace_spectral(&one, c(4.0)).unwrap(), c(0.25)) < 1e-16);
    let sin = expand_power(FunctionKind::Sin, 1, 1.0).unwrap();
    assert!(rel(laplace_spectral(&sin, c(1.0)).unwrap(), c(0.5)) < 1e-16);
    let cos2 = expand_power(FunctionKind::Cos, 2, 1.0).unwrap();
    assert!(rel(laplace_spectral(&cos2, c(2.0)).unwrap(), c(3.0 / 8.0)) < 1e-15);
    assert!(matches!(laplace_spectral(&one, c(-1.0)), Err(Error::Domain(_))));
}

#[test]
fn entry_i_examples() {
    assert!(rel(entry_i(c(4.0), c(1.0), c(1.0), 1).unwrap(), c(7.0 / 12.0)) < 1e-15);
    assert!(rel(entry_i(c(4.0), c(1.0), c(0.0), 1).unwrap(), c(0.25)) < 1e-15);
    let p = ParamSet::new().with("s", 6.0).with("β", 0.5).with("ν", 1.5).with("m", 2.0);
    let v = entry_i(c(6.0), c(0.5), c(1.5), 2).unwrap();
    assert!(rel(v, oracle("entry-I", &p)) < 1e-8);
    // s too small for the growth of the bracket
    assert!(matches!(entry_i(c(1.0), c(1.0), c(1.0), 1), Err(Error::Domain(_))));
}

#[test]
fn entries_ii_to_iv_examples() {
    assert!(rel(entry_iii(c(3.0), c(1.0), c(1.0), 0).unwrap(), c(1.0 / 8.0)) < 1e-14);
    // ∫e^{−5x}(cosh 2x − 1) dx = 5/21 − 1/5
    let v = entry_ii(c(5.0), c(1.0), c(1.0), 1).unwrap();
    assert!(rel(v, c(4.0 / 105.0)) < 1e-14);
    let p = ParamSet::new().with("s", 5.0).with("γ", 1.0).with("ν", 1.0).with("n", 1.0);
    assert!(rel(oracle("entry-II", &p), c(4.0 / 105.0)) < 1e-10);
    assert!(rel(entry_iv(c(4.0), c(1.0), c(2.0), 0).unwrap(), c(7.0 / 24.0)) < 1e-14);
    // the Gauss-series form of entry II/III agrees with the Beta form
    let (s, g, nu) = (Complex::new(3.3, 0.4), c(0.6), c(0.7));
    assert!(rel(fm::entry_ii_series(s, g, nu, 2).unwrap(), fm::entry_ii(s, g, nu, 2).unwrap()) < 1e-9);
    assert!(rel(fm::entry_iii_series(s, g, nu, 1).unwrap(), fm::entry_iii(s, g, nu, 1).unwrap()) < 1e-9);
}

#[test]
fn novel_examples() {
    assert!(rel(novel_v(c(0.0), c(1.0), c(1.0)).unwrap(), c(1.0)) < 1e-15);
    assert!(rel(novel_v(c(0.0), c(1.5), c(1.0)).unwrap(), c(PI / 4.0)) < 1e-14);
    assert!(rel(novel_v(c(0.25), c(0.5), c(1.0)).unwrap(), c(PI / 2f64.sqrt())) < 1e-14);
    assert!(rel(novel_vi(c(0.0), c(2.0)).unwrap(), c(1.0)) < 1e-15);
    assert!(rel(novel_vi(c(1.0), c(3.0)).unwrap(), c(0.5)) < 1e-15);
    let mu = c(1.7);
    assert!(rel(novel_vi(c(0.0), mu).unwrap(), 0.5 * beta(c(0.5), mu / 2.0).unwrap()) < 1e-14);
    assert!(rel(novel_vii(c(0.0), c(1.0), c(2.0)).unwrap(), c(1.0)) < 1e-14);
    let want = PI / (2.0 * (PI / 2.0).sinh());
    assert!(rel(novel_vii(c(1.0), c(1.0), c(2.0)).unwrap(), c(want)) < 1e-14);
    let p = ParamSet::new().with("a", 1.0).with("β", 1.0).with("ν", 1.0);
    assert!(rel(novel_vii(c(1.0), c(1.0), c(1.0)).unwrap(), oracle("novel-VII", &p)) < 1e-9);
    // that value is (π/2) sech(π/2)
    assert!(rel(novel_vii(c(1.0), c(1.0), c(1.0)).unwrap(), c(PI / 2.0 / (PI / 2.0).cosh())) < 1e-14);
    assert!(matches!(novel_v(c(0.0), c(1.0), c(-1.0)), Err(Error::Domain(_))));
    assert!(matches!(novel_vi(c(2.0), c(1.0)), Err(Error::Domain(_))));
}

#[test]
fn integer_power_examples() {
    let v = integer_power_transform(FunctionKind::Sin, 2, c(1.0), c(1.0)).unwrap();
    assert!(rel(v, c(0.4)) < 1e-15);
    let v = integer_power_transform(FunctionKind::Cos, 1, c(2.0), c(1.0)).unwrap();
    assert!(rel(v, c(0.2)) < 1e-15);
    let v = integer_power_transform(FunctionKind::Sin, 3, c(1.0), c(2.0)).unwrap();
    assert!(rel(v, c(6.0 / 65.0)) < 1e-15);
    let bad = integer_power_transform(FunctionKind::Cos, 4, Complex::new(1.0, 0.5), c(1.5));
    assert!(matches!(bad, Err(Error::Domain(_))));
    let ok = integer_power_transform(FunctionKind::Cos, 4, Complex::new(1.0, 0.5), c(2.5)).unwrap();
    assert!(rel(ok, fm::cos_even_sum(2, Complex::new(1.0, 0.5), c(2.5))) < 1e-13);
}

#[test]
fn product_examples() {
    let v = product_transform(&[(FunctionKind::Sin, 1, 1.0), (FunctionKind::Cos, 1, 1.0)], c(1.0)).unwrap();
    assert!(rel(v, c(0.2)) < 1e-15);
    let single = product_transform(&[(FunctionKind::Sin, 2, 0.8)], c(1.1)).unwrap();
    assert!(rel(single, integer_power_transform(FunctionKind::Sin, 2, c(0.8), c(1.1)).unwrap()) < 1e-15);
    let v = product_transform(&[(FunctionKind::Sin, 2, 1.0), (FunctionKind::Cos, 2, 2.0)], c(3.0)).unwrap();
    let f = |x: f64| Complex::new((-3.0 * x).exp() * x.sin().powi(2) * (2.0 * x).cos().powi(2), 0.0);
    let q = integrate_profiled(f, &Profile::new(3.0).with_frequency(6.0), 1e-12).unwrap();
    assert!(rel(v, q.value) < 1e-10);
    let e = product_transform(&[(FunctionKind::Sin, 1, 1.0), (FunctionKind::Cosh, 1, 1.0)], c(3.0));
    assert_eq!(e, Err(Error::FamilyMismatch));
}

#[test]
fn special_case_examples() {
    let v = special_case("eq-111", &ParamSet::new().with("a", 2.0)).unwrap();
    assert!(rel(v, c(PI / 4.0)) < 1e-15);
    let v = special_case("eq-108", &ParamSet::new().with("a", 1.0).with("b", 2.0)).unwrap();
    assert!(rel(v, c(PI / (2.0 * 2f64.sqrt()))) < 1e-15);
    assert!(matches!(special_case("eq-999", &ParamSet::new()), Err(Error::UnknownEntry(_))));
    assert!(matches!(special_case("novel-V", &ParamSet::new()), Err(Error::UnknownEntry(_))));
    let e = special_case("eq-108", &ParamSet::new().with("a", 3.0).with("b", 2.0));
    assert!(matches!(e, Err(Error::Domain(_))));
}

#[test]
fn printed_elementary_forms() {
    for mu in [0.3, 1.0, 2.5] {
        let p = ParamSet::new().with("μ", mu);
        assert!(rel(special_case("eq-107", &p).unwrap(), printed::eq_107(c(mu)).unwrap()) < 1e-13);
        assert!(rel(special_case("eq-113", &p).unwrap(), printed::eq_113(c(mu)).unwrap()) < 1e-13);
    }
    for (a, b) in [(0.0, 1.0), (0.7, 2.0), (-1.2, 1.5)] {
        let p = ParamSet::new().with("a", a).with("b", b);
        assert!(rel(special_case("eq-108", &p).unwrap(), printed::eq_108(a, b)) < 1e-13);
    }
    for a in [-3.0, -1.0, 0.0, 2.0] {
        let p = ParamSet::new().with("a", a);
        assert!(rel(special_case("eq-109", &p).unwrap(), printed::eq_109(a)) < 1e-13);
    }
    for a in [-0.9, 0.0, 0.5] {
        let p = ParamSet::new().with("a", a);
        assert!(rel(special_case("eq-110", &p).unwrap(), printed::eq_110(a)) < 1e-13);
    }
    for a in [0.1, 1.0, 7.0] {
        let p = ParamSet::new().with("a", a);
        assert!(rel(special_case("eq-111", &p).unwrap(), printed::eq_111(a)) < 1e-14);
    }
    for (a, b) in [(0.5, 1.0), (2.0, 0.7), (1.0, 3.0)] {
        let p = ParamSet::new().with("a", a).with("β", b);
        assert!(rel(special_case("eq-115", &p).unwrap(), printed::eq_115(c(a), c(b))) < 1e-13);
    }
    assert!(rel(special_case("eq-114", &ParamSet::new()).unwrap(), c(1.0)) < 1e-14);
}

#[test]
fn cosec_form_is_off_by_alpha_over_p() {
    // the plain (π/p)·cosec(πα/p) form disagrees with the integral; the
    // α/p-weighted one matches it
    for (al, pp) in [(0.3, 1.0), (0.5, 2.0), (-0.4, 1.5)] {
        let params = ParamSet::new().with("α", al).with("p", pp);
        let q = oracle("eq-112", &params);
        let good = special_case("eq-112", &params).unwrap();
        let plain = printed::eq_112(c(al), c(pp));
        assert!(rel(good, q) < 1e-9);
        assert!(rel(plain, q) > 0.1);
        assert!(rel(plain * (al / pp), q) < 1e-9);
    }
}

#[test]
fn derivative_identity_sign() {
    // the closed form equals −∫x sin(ax)/cosh²x; the integral itself is its negative
    for a in [0.5, 1.0, 2.0, 3.5] {
        let want = fm::cos_over_cosh2_derivative(c(a));
        let f = move |x: f64| Complex::new(x * (a * x).sin() / x.cosh().powi(2), 0.0);
        let q = integrate_profiled(f, &Profile::new(2.0).with_frequency(a), 1e-12).unwrap().value;
        assert!(rel(-q, want) < 1e-9, "a={a}");
        assert!(q.re * want.re < 0.0);
    }
}

#[test]
fn derivative_identity_finite_difference() {
    let h = 1e-5;
    for a in [0.5, 1.0, 2.0] {
        let fd = (novel_vii(c(a + h), c(1.0), c(2.0)).unwrap() - novel_vii(c(a - h), c(1.0), c(2.0)).unwrap()) / (2.0 * h);
        let v = special_case("eq-116", &ParamSet::new().with("a", a)).unwrap();
        assert!(rel(fd, v) < 1e-6, "a={a}: {fd} vs {v}");
    }
}

#[test]
fn beta_only_form_drops_prefactor() {
    let (a, b, nu) = (c(1.0), c(2.0), c(1.0));
    let p = ParamSet::new().with("a", 1.0).with("β", 2.0).with("ν", 1.0);
    let q = oracle("novel-VII", &p);
    let with_prefactor = novel_vii(a, b, nu).unwrap();
    let bare = fm::novel_vii_beta_form(a, b, nu).unwrap();
    assert!(rel(with_prefactor, q) < 1e-9);
    assert!(rel(bare, q) > 1e-7);
    // they differ by exactly 2^{ν−2}/β
    assert!(rel(bare * 2f64.powf(-1.0) / 2.0, with_prefactor) < 1e-13);
}

#[test]
fn section_four_finite_sum_equals_f21_form() {
    for m in 1..=4 {
        for &(b, s) in &[(1.0, 0.5), (0.3, 2.0), (2.2, 1.3), (1.0, 7.0)] {
            let sum = fm::cos_even_sum(m, c(b), c(s));
            let f = fm::cos_even_f21(m, c(b), c(s)).unwrap();
            assert!(rel(f, sum) < 1e-10);
            assert!(f.im.abs() <= 1e-10);
        }
    }
}

#[test]
fn reductions_to_known_results() {
    for &(s, g, nu) in &[(3.0, 1.0, 0.5), (2.5, 0.4, 1.7), (5.0, 2.0, -0.3), (4.0, 1.0, 2.0)] {
        let (s, g, nu) = (c(s), c(g), c(nu));
        let ii = entry_ii(s, g / 2.0, nu, 1).unwrap();
        assert!(rel(ii, fm::known_38(s, g, nu).unwrap()) < 1e-12);
        let iii = entry_iii(s, g, nu, 0).unwrap();
        assert!(rel(iii, fm::known_40(s, g, nu).unwrap()) < 1e-12);
    }
}

#[test]
fn terminating_limit_is_continuous() {
    // ν near an integer: the Levin path must approach the finite sum
    let (s, b) = (c(6.0), c(1.0));
    for (m, nu0) in [(1u32, 1.0), (1, 2.0), (2, 1.0)] {
        let exact = entry_i(s, b, c(nu0), m).unwrap();
        for d in [1e-6, -1e-6] {
            let near = entry_i(s, b, c(nu0 + d), m).unwrap();
            assert!((near - exact).norm() <= 1e-4 * exact.norm().max(1.0), "m={m} ν={nu0}{d:+e}");
        }
    }
}

#[test]
fn every_entry_passes_on_its_default_grid() {
    for e in catalog().entries() {
        let r = verify_default(e, 1e-8);
        assert!(r.all_passed() && r.skip_count() == 0, "{}", r.to_table());
        assert!(r.pass_count() >= if e.id == "eq-114" { 1 } else { 8 });
    }
}

#[test]
fn catalog_shape() {
    let cat = catalog();
    assert_eq!(cat.section(4).filter(|e| e.id.starts_with("prod-")).count(), 66);
    assert_eq!(cat.section(5).count(), 20);
    assert!(cat.get("NOVEL-v").is_ok());
    for e in cat.entries() {
        let grid = e.default_grid();
        let complex = grid.iter().filter(|p| p.iter().any(|(_, v)| v.im != 0.0)).count();
        let has_complex_param = e.params.iter().any(|p| p.kind == hyperlaplace::catalog::ParamKind::Complex);
        if has_complex_param && e.id != "eq-114" {
            assert!(complex >= 2, "{} has {complex} complex spot checks", e.id);
        }
    }
}

#[test]
fn integrands_need_real_frequencies() {
    let e = catalog().get("entry-I").unwrap();
    let p = ParamSet::new().with("s", 4.0).with("β", Complex::new(1.0, 0.2)).with("ν", 1.0).with("m", 1.0);
    assert!(e.evaluate(&p).is_ok());
    assert!(matches!(e.integrand(&p), Err(Error::IntegrandDomain(_))));
}

#[test]
fn relaxed_mode_reaches_outside_stated_conditions() {
    let e = catalog().get("eq-115").unwrap();
    let p = ParamSet::new().with("a", 0.0).with("β", 2.0);
    assert!(matches!(e.evaluate(&p), Err(Error::Domain(_))));
    let v = e.evaluate_relaxed(&p).unwrap();
    assert!(rel(v, e.oracle(&p, 1e-11).unwrap().value) < 1e-9);
    // a derivation-only condition is reported but does not block evaluation
    let v5 = catalog().get("novel-V").unwrap();
    let p = ParamSet::new().with("α", 0.5).with("β", 1.5).with("p", 1.0);
    assert!(v5.check(&p).unwrap().iter().any(|v| !v.enforced && !v.holds));
    assert!(rel(v5.evaluate(&p).unwrap(), v5.oracle(&p, 1e-11).unwrap().value) < 1e-9);
}

#[test]
fn verify_entry_examples() {
    let r = verify_entry("novel-V", &[ParamSet::new().with("α", 0.0).with("β", 1.0).with("p", 1.0)], 1e-9).unwrap();
    assert_eq!(r.pass_count(), 1);
    assert!((r.points[0].closed.unwrap() - 1.0).norm() < 1e-14);
    let r = verify_entry("entry-I", &[], 1e-8).unwrap();
    assert_eq!((r.pass_count(), r.points.len()), (0, 0));
    let grid: Vec<_> = [0.5, 1.0, 1.5, 2.0, 2.5].iter().map(|&a| ParamSet::new().with("a", a).with("β", 1.0)).collect();
    let r = verify_entry("eq-115", &grid, 1e-8).unwrap();
    assert_eq!(r.pass_count(), 5);
    let r = verify_entry("novel-V", &[ParamSet::new().with("α", 0.0).with("β", 1.0).with("p", -1.0)], 1e-9).unwrap();
    assert_eq!(r.points[0].status, PointStatus::Skip);
    assert!(r.all_passed());
    assert!(matches!(verify_entry("nope", &[], 1e-8), Err(Error::UnknownEntry(_))));
}

#[test]
fn reports_are_byte_stable() {
    let e = catalog().get("entry-III").unwrap();
    let a = verify_default(e, 1e-8).to_jsonl();
    let b = verify_default(e, 1e-8).to_jsonl();
    assert_eq!(a, b);
    let mut lines = a.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("{\"entry\":\"entry-III\",\"grid\":\"default\",\"tolerance\":1.0000000000000000e-8"));
    let first = lines.next().unwrap();
    assert!(first.contains("\"status\":\"pass\""));
    assert!(first.contains("\"closed_re\":"));
}

fn covariant_entries() -> Vec<&'static str> {
    catalog().entries().iter().filter(|e| e.scale_covariant).map(|e| e.id.as_str()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_covariance(idx in 0usize..1000, point in 0usize..1000, cval in 0.2f64..5.0) {
        let ids = covariant_entries();
        let e = catalog().get(ids[idx % ids.len()]).unwrap();
        let grid = e.default_grid();
        let p = &grid[point % grid.len()];
        let base = e.evaluate(p).unwrap();
        let scaled = e.evaluate(&e.rescale(p, cval)).unwrap();
        prop_assert!(rel(scaled * cval, base) < 1e-10, "{} {p} c={cval}", e.id);
    }

    #[test]
    fn paired_beta_forms_agree(s in 0.5f64..6.0, g in 0.2f64..3.0, nu in -0.45f64..3.0, im in -2.0f64..2.0) {
        let s = Complex::new(s + g * nu.max(0.0) + 0.1, im);
        let (g, nu) = (c(g), c(nu));
        prop_assert!(rel(fm::known_38(s, g, nu).unwrap(), fm::known_39(s, g, nu).unwrap()) < 1e-12);
        prop_assert!(rel(fm::known_40(s, g, nu).unwrap(), fm::known_41(s, g, nu).unwrap()) < 1e-12);
    }

    #[test]
    fn finite_sum_matches_f21_form(m in 1u32..=4, b in 0.1f64..3.0, s in 0.05f64..8.0) {
        let sum = fm::cos_even_sum(m, c(b), c(s));
        let f = fm::cos_even_f21(m, c(b), c(s)).unwrap();
        prop_assert!(rel(f, sum) < 1e-10);
        prop_assert!(f.im.abs() <= 1e-10);
    }

    #[test]
    fn novel_v_against_oracle(beta in 0.3f64..1.5, frac in -0.8f64..0.8, p in 0.5f64..2.5) {
        let alpha = frac * beta * p;
        let params = ParamSet::new().with("α", alpha).with("β", beta).with("p", p);
        let v = novel_v(c(alpha), c(beta), c(p)).unwrap();
        prop_assert!(rel(v, oracle("novel-V", &params)) < 1e-8);
    }
}
