use cosserat::poly::{
    matrix_curl, matrix_div, nye_forward, nye_inverse, random_matrix_field, random_scalar_field, random_skew_field, unit_cube_points, vector_curl, vector_div, vector_grad, verify_nye, verify_nye_matrix,
    PolyMatrixField, PolyScalarField, PolySkewField, PolyVectorField,
};
use cosserat::tensor::{anti, Matrix3, Vector3};
use cosserat::{Error, Mat3, MatrixField, RatScalarField, RatSkewField, RatVectorField, Rational, ScalarField, SkewField, Vec3, VectorField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn x(i: usize) -> ScalarField {
    PolyScalarField::coordinate(i)
}

fn mono(e: [u8; 3], c: f64) -> ScalarField {
    PolyScalarField::monomial(e, c).unwrap()
}

/// Central difference of a scalar field, the derivative oracle.
fn fd(f: &ScalarField, p: &Vec3, axis: usize) -> f64 {
    let h = 1e-5;
    let mut a = *p;
    let mut b = *p;
    a.0[axis] += h;
    b.0[axis] -= h;
    (f.eval(&a) - f.eval(&b)) / (2.0 * h)
}

#[test]
fn monomial_derivative_rule() {
    let f = mono([3, 2, 1], 2.0);
    assert_eq!(f.derivative(0), mono([2, 2, 1], 6.0));
    assert_eq!(f.derivative(1), mono([3, 1, 1], 4.0));
    assert_eq!(f.derivative(2), mono([3, 2, 0], 2.0));
    assert!(PolyScalarField::constant(5.0).derivative(1).is_zero());
}

#[test]
fn construction_limits() {
    assert!(PolyScalarField::monomial([4, 3, 0], 1.0).is_err());
    assert!(PolyScalarField::monomial([1, 0, 0], f64::NAN).is_err());
    let big = mono([4, 0, 0], 1.0);
    assert!(mono([3, 0, 0], 1.0).mul(&mono([0, 3, 0], 1.0)).is_ok());
    assert!(big.mul(&big).is_err());
    assert!(PolyScalarField::monomial([1, 1, 1], 0.0).unwrap().is_zero());
}

#[test]
fn grad_examples() {
    let g = vector_grad(&VectorField::position());
    assert_eq!(g, MatrixField::constant(&Mat3::identity()));
    assert!(vector_grad(&VectorField::constant(&Vector3::new(1.0, 2.0, 3.0))).is_zero());

    let v = PolyVectorField([mono([0, 2, 0], 1.0), ScalarField::zero(), ScalarField::zero()]);
    let g = vector_grad(&v);
    assert_eq!(g.row(0), PolyVectorField([ScalarField::zero(), mono([0, 1, 0], 2.0), ScalarField::zero()]));
}

#[test]
fn curl_div_examples() {
    let p = MatrixField::constant(&Matrix3([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]));
    assert!(matrix_curl(&p).is_zero());
    assert!(matrix_div(&p).is_zero());

    let a = SkewField::from_axial(VectorField::position()).materialize();
    assert_eq!(matrix_curl(&a), MatrixField::constant(&Mat3::identity().scale(2.0)));

    let v = PolyVectorField([-x(1), x(0), ScalarField::zero()]);
    assert_eq!(vector_curl(&v), VectorField::constant(&Vector3::new(0.0, 0.0, 2.0)));
    assert_eq!(vector_div(&VectorField::position()), ScalarField::constant(3.0));
}

#[test]
fn matrix_curl_is_row_curl() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = random_matrix_field(&mut rng, 3).unwrap();
    let c = matrix_curl(&p);
    let d = matrix_div(&p);
    for i in 0..3 {
        assert_eq!(c.row(i), vector_curl(&p.row(i)));
        assert_eq!(d.0[i], vector_div(&p.row(i)));
    }
}

#[test]
fn derivatives_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = random_scalar_field(&mut rng, 4).unwrap();
    for p in unit_cube_points(&mut rng, 20) {
        for axis in 0..3 {
            assert!((f.derivative(axis).eval(&p) - fd(&f, &p, axis)).abs() < 1e-8);
        }
    }
}

fn rational_field(rng: &mut ChaCha8Rng, degree: u8) -> RatScalarField {
    let mut terms = Vec::new();
    for i in 0..=degree {
        for j in 0..=(degree - i) {
            for k in 0..=(degree - i - j) {
                terms.push(([i, j, k], Rational::new(rng.gen_range(-50..=50), rng.gen_range(1..=12))));
            }
        }
    }
    PolyScalarField::from_terms(terms).unwrap()
}

#[test]
fn calculus_identities_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let f = rational_field(&mut rng, 4);
        assert!(vector_curl(&f.gradient()).is_zero());
        let rows: [RatVectorField; 3] =
            std::array::from_fn(|_| PolyVectorField(std::array::from_fn(|_| rational_field(&mut rng, 4))));
        let p = PolyMatrixField::from_rows(rows);
        assert!(matrix_div(&matrix_curl(&p)).is_zero());
        let v = PolyVectorField(std::array::from_fn(|_| rational_field(&mut rng, 4)));
        assert!(vector_div(&vector_curl(&v)).is_zero());
    }
}

#[test]
fn calculus_identities_to_rounding_in_f64() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let f = random_scalar_field(&mut rng, 4).unwrap();
        assert!(vector_curl(&f.gradient()).max_abs_coefficient() <= 1e-14);
        let p = random_matrix_field(&mut rng, 4).unwrap();
        assert!(matrix_div(&matrix_curl(&p)).max_abs_coefficient() <= 1e-14);
    }
}

#[test]
fn arithmetic_commutes_with_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f = random_scalar_field(&mut rng, 3).unwrap();
    let g = random_scalar_field(&mut rng, 3).unwrap();
    let sum = &f + &g;
    let prod = f.mul(&g).unwrap();
    for p in unit_cube_points(&mut rng, 50) {
        let (a, b) = (f.eval(&p), g.eval(&p));
        assert!((sum.eval(&p) - (a + b)).abs() <= 1e-12 * (1.0 + (a + b).abs()));
        assert!((prod.eval(&p) - a * b).abs() <= 1e-12 * (1.0 + (a * b).abs()));
    }
}

#[test]
fn skew_field_materializes_to_skew() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = random_skew_field(&mut rng, 3).unwrap();
    let m = a.materialize();
    assert_eq!(m.transpose(), -m.clone());
    for p in unit_cube_points(&mut rng, 10) {
        assert_eq!(a.eval(&p).to_matrix(), m.eval(&p));
    }
    assert!(PolySkewField::from_matrix_field(&MatrixField::constant(&Mat3::identity())).is_err());
}

#[test]
fn nye_pointwise_examples() {
    assert_eq!(nye_forward(&Mat3::zero()), Mat3::zero());
    assert_eq!(nye_forward(&Mat3::identity()), Mat3::identity().scale(-2.0));
    let k = anti(&Vector3::new(0.0, 0.0, 1.0)).to_matrix();
    assert_eq!(nye_forward(&k), anti(&Vector3::new(0.0, 0.0, -1.0)).to_matrix());
    assert_eq!(nye_inverse(&Mat3::identity().scale(-2.0)), Mat3::identity());
    assert_eq!(nye_inverse(&Mat3::zero()), Mat3::zero());
}

#[test]
fn nye_round_trip_exact_on_rationals() {
    let k = Matrix3::from_fn(|i, j| Rational::new((i * 5 + j * 3) as i64 - 7, (j + 2) as i64));
    let alpha = nye_forward(&k);
    assert_eq!(nye_inverse(&alpha), k);
    assert_eq!(alpha.trace(), -Rational::from_integer(2) * k.trace());
    assert_eq!(alpha.skew(), -k.skew());
    let twelve = Rational::from_integer(12);
    assert_eq!(k.norm_sq(), alpha.dev_sym().norm_sq() + alpha.skew().norm_sq() + alpha.trace() * alpha.trace() / twelve);
}

#[test]
fn verify_nye_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let points = unit_cube_points(&mut rng, 100);

    let a = SkewField::from_axial(VectorField::position());
    let report = verify_nye(&a, &points);
    assert_eq!(report.max_discrepancy(), 0.0);
    let p = Vector3::new(0.3, 0.1, 0.7);
    assert_eq!(matrix_curl(&a.materialize()).eval(&p), Mat3::identity().scale(2.0));
    assert_eq!(vector_grad(&a.axial).eval(&p), Mat3::identity());

    let c = SkewField::from_axial(VectorField::constant(&Vector3::new(1.0, -2.0, 0.5)));
    assert!(matrix_curl(&c.materialize()).is_zero());
    assert_eq!(verify_nye(&c, &points).max_discrepancy(), 0.0);

    let f = SkewField::from_axial(PolyVectorField([mono([0, 2, 0], 1.0), mono([1, 0, 1], 1.0), &x(0) + &x(1)]));
    assert!(verify_nye(&f, &points).max_discrepancy() <= 1e-13);
}

#[test]
fn verify_nye_exact_on_rationals() {
    let q = |n, d| Rational::new(n, d);
    let m = |e, c| RatScalarField::monomial(e, c).unwrap();
    let a = RatSkewField::from_axial(PolyVectorField([
        &m([2, 1, 0], q(1, 3)) + &m([0, 0, 3], q(-5, 2)),
        m([1, 1, 1], q(7, 4)),
        &m([0, 3, 1], q(2, 9)) + &m([1, 0, 0], q(1, 1)),
    ]));
    let points: Vec<_> = (0..5).map(|i| Vector3::new(q(i, 3), q(1 - i, 5), q(2 * i + 1, 7))).collect();
    assert_eq!(verify_nye(&a, &points).max_discrepancy(), Rational::from_integer(0));
}

#[test]
fn verify_nye_matrix_rejects_non_skew() {
    let p = MatrixField::constant(&Mat3::identity());
    assert!(matches!(verify_nye_matrix(&p, &[Vector3::zero()]), Err(Error::InvalidInput(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nye_holds_for_random_fields(seed in any::<u64>(), degree in 0u32..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_skew_field(&mut rng, degree).unwrap();
        let points = unit_cube_points(&mut rng, 50);
        prop_assert!(verify_nye(&a, &points).max_discrepancy() <= 1e-13);
    }

    #[test]
    fn nye_maps_round_trip(entries in proptest::array::uniform3(proptest::array::uniform3(-10.0..10.0f64))) {
        let k = Matrix3(entries);
        let back = nye_inverse(&nye_forward(&k));
        prop_assert!((back - k).max_abs() <= 4.0 * f64::EPSILON * k.max_abs().max(f64::MIN_POSITIVE) * 4.0);
        let alpha = nye_forward(&k);
        let rebuilt = alpha.dev_sym().norm_sq() + alpha.skew().norm_sq() + alpha.trace().powi(2) / 12.0;
        prop_assert!((rebuilt - k.norm_sq()).abs() <= 1e-13 * k.norm_sq().max(f64::MIN_POSITIVE));
    }
}
