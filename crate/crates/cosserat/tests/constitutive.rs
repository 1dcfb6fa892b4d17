use cosserat::constitutive::{
    acoustic_blocks, balance_residuals, balance_residuals_with, check_conditions, couple_stress,
    couple_stress_dislocation, couple_stress_eringen, dislocation_couple_stress, energy_dislocation, energy_eringen,
    energy_eringen_fields, energy_mindlin, energy_relaxed, energy_split, energy_split_parts, rank_one_second_derivative,
    stress, stress_dislocation, stress_eringen, ConditionReport, Mindlin3Tensor, StrainState,
};
use cosserat::params::{
    to_dislocation, weight_convert, CosseratModuli, DislocationParams, EringenParams, Extended, LakesConstants,
    MindlinMicropolarParams, Params, RelaxedMicromorphicParams, TaggedParams, UnitSystem,
};
use cosserat::poly::{matrix_curl, nye_forward, random_skew_field, random_vector_field, unit_cube_points};
use cosserat::tensor::{anti, sym_eigen, Matrix3, SkewMatrix3, Vector3};
use cosserat::{Error, Mat3, MatrixField, Rational, SkewField, Vec3, VectorField};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn moduli(lambda_e: f64, mu_e: f64, mu_c: f64, l_c: f64, alpha: [f64; 3]) -> CosseratModuli<f64> {
    CosseratModuli { lambda_e, mu_e, mu_c, l_c, alpha }
}

fn mat() -> impl Strategy<Value = Mat3> {
    proptest::array::uniform3(proptest::array::uniform3(-2.0..2.0f64)).prop_map(Matrix3)
}

fn unit() -> impl Strategy<Value = Vec3> {
    proptest::array::uniform3(-1.0..1.0f64)
        .prop_filter("non-degenerate", |v| Vector3(*v).norm() > 1e-3)
        .prop_map(|v| {
            let v = Vector3(v);
            v.scale(1.0 / v.norm())
        })
}

/// Arbitrary-sign moduli and weights of unit order.
fn any_moduli() -> impl Strategy<Value = CosseratModuli<f64>> {
    (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, 0.2..3.0f64, proptest::array::uniform3(-3.0..3.0f64))
        .prop_map(|(l, m, c, lc, a)| moduli(l, m, c, lc, a))
}

/// Sum of absolute term magnitudes, the scale for energy comparisons.
fn energy_scale(m: &CosseratModuli<f64>, e: &Mat3, k: &Mat3) -> f64 {
    let s = m.curvature_modulus().abs();
    (m.lambda_e.abs() + m.mu_e.abs() + m.mu_c.abs()) * e.norm_sq() * 3.0
        + s * m.alpha.iter().map(|a| a.abs()).sum::<f64>() * k.norm_sq() * 3.0
        + f64::MIN_POSITIVE
}

fn dislocation(m: &CosseratModuli<f64>) -> DislocationParams {
    DislocationParams::new(m.lambda_e, m.mu_e, m.mu_c, m.l_c, m.alpha)
}

/// Central difference of `f` with respect to entry `(i, j)`.
fn fd(f: impl Fn(&Mat3) -> f64, x: &Mat3, i: usize, j: usize) -> f64 {
    let h = 1e-6;
    let mut a = *x;
    let mut b = *x;
    a.0[i][j] += h;
    b.0[i][j] -= h;
    (f(&a) - f(&b)) / (2.0 * h)
}

#[test]
fn energy_examples() {
    let m = moduli(1.0, 1.0, 7.0, 1.0, [1.0; 3]);
    assert_eq!(energy_dislocation(&Mat3::zero(), &Mat3::zero(), &m), 0.0);
    assert_eq!(energy_dislocation(&Mat3::identity(), &Mat3::zero(), &m), 7.5);

    let er = EringenParams::new(0.0, 1.0, 0.0, 0.0, 0.0, 0.0);
    assert_eq!(energy_eringen(&Mat3::zero(), &Mat3::zero(), &er), 0.0);
    assert_eq!(energy_eringen(&Mat3::identity(), &Mat3::zero(), &er), 3.0);

    let m = moduli(0.0, 1.0, 0.0, 1.0, [0.0; 3]);
    assert_eq!(energy_split_parts(&Mat3::identity(), &Mat3::zero(), &m).0, 3.0);
    let m = moduli(0.0, 2.0, 0.0, 1.0, [0.0, 0.0, 1.0]);
    assert_eq!(energy_split_parts(&Mat3::zero(), &Mat3::identity(), &m).1, 4.5);
}

#[test]
fn energy_examples_exact_on_rationals() {
    let q = |n| Rational::from_integer(n);
    let m = CosseratModuli { lambda_e: q(1), mu_e: q(1), mu_c: q(7), l_c: q(1), alpha: [q(1); 3] };
    let e = Matrix3::<Rational>::identity();
    assert_eq!(energy_dislocation(&e, &Matrix3::zero(), &m), Rational::new(15, 2));
    let m = CosseratModuli { lambda_e: q(3), mu_e: q(2), mu_c: q(5), l_c: q(2), alpha: [q(1), q(-2), q(3)] };
    let x = Matrix3::from_fn(|i, j| Rational::new((i * 3 + j) as i64 - 4, 3));
    let k = Matrix3::from_fn(|i, j| Rational::new((2 * i + 5 * j) as i64 - 6, 5));
    assert_eq!(energy_split(&x, &k, &m), energy_dislocation(&x, &nye_forward(&k), &m));
}

#[test]
fn mindlin_contractions_for_identity() {
    let kappa = Mindlin3Tensor::from_curvature(&Mat3::identity());
    assert_eq!(kappa.full_contraction(), 6.0);
    assert_eq!(kappa.trace_contraction(), 0.0);
    assert_eq!(kappa.cross_contraction(), -6.0);
    let zero = Mindlin3Tensor::from_curvature(&Mat3::zero());
    let mp = MindlinMicropolarParams {
        lambda_m: 1.0,
        mu_m: 1.0,
        mu_c_m: 1.0,
        beta1_m: 1.0,
        beta2_m: 1.0,
        beta3_m: 1.0,
    };
    assert_eq!(energy_mindlin(&Mat3::zero(), &SkewMatrix3::zero(), &zero, &mp), 0.0);
    let mut bad = [[[0.0; 3]; 3]; 3];
    bad[0][1][2] = 1.0;
    assert!(Mindlin3Tensor::new(bad).is_err());
    bad[0][2][1] = -1.0;
    assert!(Mindlin3Tensor::new(bad).is_ok());
}

#[test]
fn relaxed_examples() {
    let rm = RelaxedMicromorphicParams {
        mu_e: 0.0,
        lambda_e: 0.0,
        mu_c: 0.0,
        mu_micro: 1.0,
        lambda_micro: 0.0,
        mu: 0.0,
        l_c: 1.0,
        a1: 0.0,
        a2: 0.0,
        a3: 0.0,
    };
    let id = Mat3::identity();
    assert_eq!(energy_relaxed(&id, &id, &Mat3::zero(), &rm), 3.0);
    let rm = RelaxedMicromorphicParams { mu_e: 2.0, lambda_e: 1.0, mu_c: 3.0, lambda_micro: 0.5, ..rm };
    let p: Mat3 = Matrix3([[1.0, 2.0, 0.0], [0.5, -1.0, 0.3], [0.0, 0.1, 2.0]]);
    let micro = p.sym().norm_sq() + 0.25 * p.trace().powi(2);
    assert_eq!(energy_relaxed(&p, &p, &Mat3::zero(), &rm), micro);
}

#[test]
fn stress_examples() {
    let d = TaggedParams::dislocation(DislocationParams::new(1.0, 2.0, 0.0, 1.0, [1.0; 3]));
    assert_eq!(stress(&Mat3::zero(), &d).unwrap(), Mat3::zero());
    let skew = anti(&Vector3::new(1.0, -2.0, 3.0)).to_matrix();
    assert_eq!(stress(&skew, &d).unwrap(), Mat3::zero());
    let lakes = TaggedParams::new(
        Params::Lakes(LakesConstants { e: 3.0, g: 1.0, nu: None, n: 0.5, ell_t: 1.0, ell_b: 1.0, psi: 1.0 }),
        UnitSystem::MpaMm,
    );
    assert!(matches!(stress(&skew, &lakes), Err(Error::UnsupportedNotation(_))));
    assert!(matches!(couple_stress(&skew, &lakes), Err(Error::UnsupportedNotation(_))));
    let inf = TaggedParams::dislocation(DislocationParams { lambda_e: Extended::Infinite, ..DislocationParams::new(0.0, 1.0, 1.0, 1.0, [1.0; 3]) });
    assert!(matches!(stress(&skew, &inf), Err(Error::Unavailable(_))));
}

#[test]
fn condition_examples() {
    let syntactic = LakesConstants { e: 2758.0, g: 1033.0, nu: Some(0.34), n: 0.1f64.sqrt(), ell_t: 0.065, ell_b: 0.0325, psi: 1.5 };
    let d = to_dislocation(&Params::Lakes(syntactic), 1.0).unwrap();
    let r = check_conditions(&d);
    assert!(!r.positive_definite && r.well_posed && r.conformal_curvature);

    let ones = DislocationParams::new(1.0, 1.0, 1.0, 1.0, weight_convert([1.0, 1.0, 1.0]));
    let r = check_conditions(&ones);
    assert!(r.positive_definite && r.well_posed && r.real_plane_waves && r.strongly_elliptic);
    assert!(!r.conformal_curvature);

    let r = check_conditions(&DislocationParams::new(1.0, 1.0, -1.0, 1.0, weight_convert([1.0, 1.0, 1.0])));
    assert!(!r.real_plane_waves && !r.strongly_elliptic);
    let violated: Vec<_> = r.violated().map(|i| i.name.as_str()).collect();
    assert!(violated.contains(&"mu_c > 0"));
    assert!(violated.contains(&"mu_e + mu_c > 0"));
    let margin = r.inequalities.iter().find(|i| i.name == "mu_c > 0").unwrap().margin;
    assert_eq!(margin, -1.0);
}

#[test]
fn condition_infinite_flags_are_limits() {
    let d = DislocationParams {
        lambda_e: Extended::Infinite,
        mu_c: Extended::Infinite,
        ..DislocationParams::new(0.0, 1.0, 0.0, 1.0, weight_convert([1.0, 1.0, 1.0]))
    };
    let r = check_conditions(&d);
    assert!(r.positive_definite && r.real_plane_waves && r.strongly_elliptic);
}

#[test]
fn report_serializes_relations() {
    let r = check_conditions(&DislocationParams::new(1.0, 1.0, 1.0, 1.0, [1.0; 3]));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["inequalities"][0]["relation"], ">");
    assert!(json["inequalities"].as_array().unwrap().iter().any(|i| i["relation"] == ">="));
}

#[test]
fn acoustic_block_examples() {
    let d = DislocationParams::new(0.5, 2.0, 0.7, 1.0, [1.0, 2.0, 3.0]);
    let (q1, _) = acoustic_blocks(&d, &Vector3::unit(0), &Vector3::unit(0)).unwrap();
    assert_eq!(q1, Mat3::diag(0.5 * 4.5, 0.5 * 2.7, 0.5 * 2.7));
    let d = DislocationParams::new(0.0, 1.0, 0.0, 1.0, [1.0; 3]);
    let (q1, _) = acoustic_blocks(&d, &Vector3::unit(0), &Vector3::unit(2)).unwrap();
    assert_eq!(q1, Mat3::diag(1.0, 0.5, 0.5));
    assert_eq!(sym_eigen(&q1).unwrap().values, [0.5, 0.5, 1.0]);
    let bad = Vector3::new(1.0, 1.0, 0.0);
    assert!(matches!(acoustic_blocks(&d, &bad, &Vector3::unit(0)), Err(Error::InvalidDirection(_))));
    assert!(matches!(acoustic_blocks(&d, &Vector3::unit(0), &bad), Err(Error::InvalidDirection(_))));
}

#[test]
fn rank_one_examples() {
    let b = [1.3, 0.4, -2.0];
    let r = rank_one_second_derivative(b, &Vector3::unit(0), &Vector3::unit(1));
    assert_eq!(r.direct, (b[0] + b[1]) / 2.0);
    assert_eq!(r.closed_form, (b[0] + b[1]) / 2.0);
    let r = rank_one_second_derivative(b, &Vector3::unit(2), &Vector3::unit(2));
    assert_eq!(r.direct, b[0] + b[2]);
    assert_eq!(r.closed_form, b[0] + b[2]);
    let r = rank_one_second_derivative([1.0, -1.0, 0.0], &Vector3::unit(1), &Vector3::unit(1));
    assert_eq!(r.direct, 1.0);
    assert_eq!(r.second_derivative(), 2.0);
}

#[test]
fn rank_one_exact_on_rationals() {
    let q = |n, d| Rational::new(n, d);
    let b = [q(3, 2), q(-1, 3), q(5, 7)];
    let xi = Vector3::new(q(1, 2), q(-2, 3), q(3, 1));
    let eta = Vector3::new(q(4, 5), q(1, 1), q(-1, 6));
    let r = rank_one_second_derivative(b, &xi, &eta);
    assert_eq!(r.direct, r.closed_form);
}

#[test]
fn eringen_fields_form_matches_matrix_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let u = random_vector_field(&mut rng, 2).unwrap();
    let theta = random_vector_field(&mut rng, 2).unwrap();
    let er = EringenParams::new(1.2, 0.7, 0.9, 0.3, -0.4, 1.1);
    let du = cosserat::poly::vector_grad(&u);
    let dtheta = cosserat::poly::vector_grad(&theta);
    for p in unit_cube_points(&mut rng, 20) {
        let th = theta.eval(&p);
        let e = du.eval(&p) - anti(&th).to_matrix();
        let k = dtheta.eval(&p);
        let a = energy_eringen(&e.transpose(), &k, &er);
        let b = energy_eringen_fields(&du.eval(&p), &th, &k, &er);
        assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }
}

#[test]
fn balance_trivial_fields() {
    let u = VectorField::position();
    let a = SkewField::from_axial(VectorField::constant(&Vector3::new(0.3, -0.2, 0.5)));
    let d = TaggedParams::dislocation(DislocationParams::new(1.0, 2.0, 3.0, 1.0, [0.5, 0.2, 0.1]));
    let r = balance_residuals(&u, &a, &d).unwrap();
    assert!(r.force_vec.is_zero() && r.force_dislo.is_zero());
    assert_eq!(r.couple_vec.degree(), 0);
    assert_eq!(r.couple_skew.degree(), 0);
    let lakes = TaggedParams::new(
        Params::Lakes(LakesConstants { e: 3.0, g: 1.0, nu: None, n: 0.5, ell_t: 1.0, ell_b: 1.0, psi: 1.0 }),
        UnitSystem::MpaMm,
    );
    assert!(matches!(balance_residuals(&u, &a, &lakes), Err(Error::UnsupportedNotation(_))));
}

#[test]
fn balance_couple_constant_is_one_half() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let m = moduli(1.3, 2.1, 0.8, 1.4, [0.7, -0.3, 0.4]);
    for _ in 0..5 {
        let u = random_vector_field(&mut rng, 3).unwrap();
        let a = random_skew_field(&mut rng, 3).unwrap();
        let r = balance_residuals_with(&u, &a, &m);
        let lhs = r.couple_skew.axl_skew();
        let rhs = r.couple_vec.scale(0.5);
        for p in unit_cube_points(&mut rng, 20) {
            let (x, y) = (lhs.eval(&p), rhs.eval(&p));
            assert!((x - y).max_abs() <= 1e-12 * (1.0 + y.max_abs()));
            let (f1, f2) = (r.force_vec.eval(&p), r.force_dislo.eval(&p));
            assert!((f1 - f2).max_abs() <= 1e-12 * (1.0 + f1.max_abs()));
        }
    }
}

#[test]
fn balance_eringen_record_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let m = moduli(1.0, 2.0, 0.5, 1.0, [0.7, 0.3, 0.4]);
    let u = random_vector_field(&mut rng, 3).unwrap();
    let a = random_skew_field(&mut rng, 3).unwrap();
    let d = balance_residuals(&u, &a, &TaggedParams::dislocation(dislocation(&m))).unwrap();
    let e = balance_residuals(&u, &a, &TaggedParams::new(Params::Eringen(m.to_eringen()), UnitSystem::MpaMm)).unwrap();
    for p in unit_cube_points(&mut rng, 20) {
        assert!((d.couple_vec.eval(&p) - e.couple_vec.eval(&p)).max_abs() <= 1e-12);
        assert!((d.force_dislo.eval(&p) - e.force_dislo.eval(&p)).max_abs() <= 1e-12);
    }
}

#[test]
fn balance_couple_uses_curl_of_skew_field() {
    let a = SkewField::from_axial(VectorField::position());
    let curl = matrix_curl(&a.materialize());
    assert_eq!(curl, MatrixField::constant(&Mat3::identity().scale(2.0)));
}

fn implication(r: &ConditionReport, mu_c: f64) -> bool {
    mu_c <= 0.0 || r.implication_chain_holds()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn four_energy_forms_agree(m in any_moduli(), e in mat(), k in mat()) {
        let s = StrainState::new(e, k);
        prop_assert_eq!(s.e_star, e.transpose());
        let scale = energy_scale(&m, &e, &k);
        let w = energy_dislocation(&s.e, &s.alpha, &m);
        let w_er = energy_eringen(&s.e_star, &s.k, &m.to_eringen());
        let w_split = energy_split(&s.e, &s.k, &m);
        let kappa = Mindlin3Tensor::from_curvature(&s.k);
        let gamma = SkewMatrix3::from_matrix(&e.skew()).unwrap();
        let w_m = energy_mindlin(&e.sym(), &gamma, &kappa, &m.to_mindlin());
        for other in [w_er, w_split, w_m] {
            prop_assert!((other - w).abs() <= 1e-12 * scale, "{w} vs {other}");
        }
        let back = m.to_mindlin().to_cosserat(m.l_c).unwrap();
        for i in 0..3 {
            prop_assert!((back.alpha[i] - m.alpha[i]).abs() <= 1e-12 * (1.0 + m.alpha[i].abs()));
        }
    }

    #[test]
    fn relaxed_with_skew_p_is_cosserat(m in any_moduli(), du in mat(), axial in proptest::array::uniform3(-2.0..2.0f64), k in mat(), micro in (-3.0..3.0f64, -3.0..3.0f64)) {
        let p = anti(&Vector3(axial)).to_matrix();
        let alpha = nye_forward(&k);
        let rm = RelaxedMicromorphicParams {
            mu_e: m.mu_e,
            lambda_e: m.lambda_e,
            mu_c: m.mu_c,
            mu_micro: micro.0,
            lambda_micro: micro.1,
            mu: m.mu_e,
            l_c: m.l_c,
            a1: m.a_weights()[0],
            a2: m.a_weights()[1],
            a3: m.a_weights()[2],
        };
        let w_r = energy_relaxed(&du, &p, &(-alpha), &rm);
        let w_c = energy_dislocation(&(du - p), &alpha, &m);
        prop_assert!((w_r - w_c).abs() <= 4.0 * f64::EPSILON * w_c.abs());
    }

    #[test]
    fn stresses_are_energy_gradients(m in any_moduli(), e in mat(), k in mat()) {
        let sigma = stress_dislocation(&e, &m);
        let couple = couple_stress_dislocation(&k, &m);
        let alpha = nye_forward(&k);
        let couple_alpha = dislocation_couple_stress(&alpha, &m);
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((fd(|x| energy_dislocation(x, &alpha, &m), &e, i, j) - sigma[(i, j)]).abs() <= 1e-5);
                prop_assert!((fd(|x| energy_split(&e, x, &m), &k, i, j) - couple[(i, j)]).abs() <= 1e-5);
                prop_assert!((fd(|x| energy_dislocation(&e, x, &m), &alpha, i, j) - couple_alpha[(i, j)]).abs() <= 1e-5);
            }
        }
        let w = energy_split(&e, &k, &m);
        let euler = sigma.inner(&e) + couple.inner(&k);
        prop_assert!((euler - 2.0 * w).abs() <= 1e-12 * energy_scale(&m, &e, &k));
        let euler_alpha = sigma.inner(&e) + couple_alpha.inner(&alpha);
        prop_assert!((euler_alpha - 2.0 * w).abs() <= 1e-12 * energy_scale(&m, &e, &k));
    }

    #[test]
    fn eringen_stresses_match(m in any_moduli(), e in mat(), k in mat()) {
        let er = m.to_eringen();
        let sigma_star = stress_eringen(&e.transpose(), &er);
        let sigma = stress_dislocation(&e, &m);
        prop_assert!((sigma_star.transpose() - sigma).max_abs() <= 1e-12 * (1.0 + sigma.max_abs()));
        let m_star = couple_stress_eringen(&k, &er);
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((fd(|x| energy_eringen(x, &k, &er), &e.transpose(), i, j) - sigma_star[(i, j)]).abs() <= 1e-5);
                prop_assert!((fd(|x| energy_eringen(&e.transpose(), x, &er), &k, i, j) - m_star[(i, j)]).abs() <= 1e-5);
            }
        }
        let p = TaggedParams::new(Params::Eringen(er), UnitSystem::MpaMm);
        prop_assert_eq!(stress(&e.transpose(), &p).unwrap(), sigma_star);
        prop_assert_eq!(couple_stress(&k, &p).unwrap(), m_star);
    }

    #[test]
    fn implication_chain(m in any_moduli(), inf in (any::<bool>(), any::<bool>())) {
        let mut d = dislocation(&m);
        if inf.0 { d.lambda_e = Extended::Infinite; }
        if inf.1 { d.mu_c = Extended::Infinite; }
        let r = check_conditions(&d);
        prop_assert!(implication(&r, d.mu_c.value()));
    }

    #[test]
    fn acoustic_definiteness_matches_closed_form(m in any_moduli(), xi in unit(), zeta in unit()) {
        let d = dislocation(&m);
        let (q1, q2) = acoustic_blocks(&d, &xi, &zeta).unwrap();
        prop_assert_eq!(q1, q1.transpose());
        prop_assert_eq!(q2, q2.transpose());
        let pd = sym_eigen(&q1).unwrap().values[0] > 0.0 && sym_eigen(&q2).unwrap().values[0] > 0.0;
        prop_assert_eq!(pd, check_conditions(&d).strongly_elliptic);
    }

    #[test]
    fn rank_one_closed_form(b in proptest::array::uniform3(-5.0..5.0f64), xi in proptest::array::uniform3(-2.0..2.0f64), eta in proptest::array::uniform3(-2.0..2.0f64)) {
        let r = rank_one_second_derivative(b, &Vector3(xi), &Vector3(eta));
        prop_assert!((r.direct - r.closed_form).abs() <= 1e-12 * r.direct.abs().max(1.0));
    }
}
