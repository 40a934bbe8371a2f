use fakedeg_core::qpoly::{
    cyclotomic, eval_at_root_of_unity, exact_div, gcd_primitive, palindromic_descend, q_int, q_int_scaled,
    q_pow_minus_one, IntPoly,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..max_len).prop_map(IntPoly::from_ints)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// `Σ_k c_k (x + 1/x)^k`, multiplied through by `x^d`.
fn lift(psi: &IntPoly) -> IntPoly {
    let d = psi.degree().unwrap();
    let x_plus_inv_times_x = IntPoly::from_ints([1, 0, 1]);
    psi.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut term = IntPoly::constant(c.clone());
            for _ in 0..k {
                term = term * &x_plus_inv_times_x;
            }
            term.shift(d - k)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn q_int_at_one(n in 1i64..200) {
        prop_assert_eq!(q_int(n).unwrap().eval_at_one(), BigInt::from(n));
    }

    #[test]
    fn q_int_scaled_substitutes(n in 1i64..40, k in 1i64..8) {
        let scaled = q_int_scaled(n, k).unwrap();
        prop_assert_eq!(&scaled, &q_int(n).unwrap().substitute_power(k as usize));
        prop_assert_eq!(scaled.eval_at_one(), BigInt::from(n));
    }

    #[test]
    fn division_round_trip(f in poly(12), g in nonzero_poly(8)) {
        prop_assert_eq!(exact_div(&(&f * &g), &g).unwrap(), f);
    }

    #[test]
    fn gcd_divides_and_is_greatest(a in nonzero_poly(6), b in nonzero_poly(6), c in nonzero_poly(4)) {
        let f = &a * &c;
        let g = &b * &c;
        let d = gcd_primitive(&f, &g).unwrap();
        prop_assert!(exact_div(&f, &d).is_ok());
        prop_assert!(exact_div(&g, &d).is_ok());
        prop_assert!(d.leading_coeff().unwrap() > &BigInt::from(0));
        // any common factor divides the gcd, up to content
        let c_prim = c.primitive_part();
        if c_prim.degree() > Some(0) {
            prop_assert!(exact_div(&d, &c_prim).is_ok());
        }
    }

    #[test]
    fn root_of_unity_kills_q_n_minus_one(n in 1u64..60, m in -100i64..100) {
        let v = eval_at_root_of_unity(&q_pow_minus_one(n as usize), n, m).unwrap();
        prop_assert!(v.representative.is_zero());
    }

    #[test]
    fn root_of_unity_is_a_ring_map(f in poly(20), g in poly(20), n in 1u64..24, m in 0i64..24) {
        let ev = |p: &IntPoly| eval_at_root_of_unity(p, n, m).unwrap().representative;
        let modulus = cyclotomic(n).unwrap();
        prop_assert_eq!(ev(&(&f + &g)), (ev(&f) + ev(&g)).rem_monic(&modulus));
        prop_assert_eq!(ev(&(&f * &g)), (ev(&f) * ev(&g)).rem_monic(&modulus));
    }

    #[test]
    fn descent_then_lift_is_identity(m in 2u64..40) {
        let phi = cyclotomic(2 * m).unwrap();
        let psi = palindromic_descend(&phi).unwrap();
        prop_assert_eq!(lift(&psi), phi);
    }
}

#[test]
fn cyclotomic_products() {
    for n in 1..=60u64 {
        let product: IntPoly = (1..=n).filter(|d| n % d == 0).map(|d| cyclotomic(d).unwrap()).product();
        assert_eq!(product, q_pow_minus_one(n as usize), "n = {n}");
    }
}

#[test]
fn cyclotomic_twelve_by_recurrence() {
    let denominator: IntPoly = [1, 2, 3, 4, 6].iter().map(|&d| cyclotomic(d).unwrap()).product();
    let by_hand = exact_div(&q_pow_minus_one(12), &denominator).unwrap();
    assert_eq!(by_hand, IntPoly::from_ints([1, 0, -1, 0, 1]));
    assert_eq!(cyclotomic(12).unwrap(), by_hand);
}

#[test]
fn q_integer_identities() {
    // [2n]_q = [2]_q [n]_{q^2}
    for n in 1..=20 {
        let lhs = q_int(2 * n).unwrap();
        let rhs = q_int(2).unwrap() * q_int_scaled(n, 2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            exact_div(&lhs, &q_int(2).unwrap()).unwrap(),
            q_int_scaled(n, 2).unwrap()
        );
    }
    assert_eq!(q_int(3).unwrap() * q_int(2).unwrap(), IntPoly::from_ints([1, 2, 2, 1]));
}

#[test]
fn gcd_examples() {
    let f4 = gcd_primitive(&q_int(12).unwrap(), &IntPoly::from_exponents([0, 4, 6, 10])).unwrap();
    assert_eq!(f4, q_int_scaled(2, 6).unwrap());
    let h3 = gcd_primitive(&q_int(10).unwrap(), &IntPoly::from_exponents([0, 4, 8])).unwrap();
    assert!(h3.is_one());
}
