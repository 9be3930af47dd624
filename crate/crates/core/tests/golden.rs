//! Fixed displays and hand-derived maps for small members of the families.

use grade3::altpf::{h_even, sub_pfaffians, u_even, u_odd, v_even, v_j, v_odd, AltMatrix};
use grade3::ideal::GradedIdeal;
use grade3::polymat::PolyMatrix;
use grade3::trimres::{build_b, build_complex, koszul_target, koszul_wedge2, q_constant_rank, TrimInput};
use grade3::{Field, Poly};

fn f() -> Field {
    Field::default()
}

fn p(s: &str) -> Poly {
    Poly::parse(f(), s).unwrap()
}

fn rows_of(m: &AltMatrix) -> Vec<Vec<String>> {
    (0..m.size()).map(|i| m.row(i).iter().map(|e| e.to_string()).collect()).collect()
}

fn square_rows(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn parse_rows(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|e| p(e).to_string()).collect()).collect()
}

#[test]
fn small_v_matrices_match_their_displays() {
    let v1ev = parse_rows(&[&["0", "x^2", "z^2"], &["-x^2", "0", "y^2"], &["-z^2", "-y^2", "0"]]);
    assert_eq!(rows_of(&v_even(f(), 1).unwrap()), v1ev);

    let v2ev = parse_rows(&[
        &["0", "0", "0", "x^2", "z^2"],
        &["0", "0", "x^2", "z^2", "y^2"],
        &["0", "-x^2", "0", "y^2", "0"],
        &["-x^2", "-z^2", "-y^2", "0", "0"],
        &["-z^2", "-y^2", "0", "0", "0"],
    ]);
    assert_eq!(rows_of(&v_even(f(), 2).unwrap()), v2ev);

    let v1odd = parse_rows(&[&["0", "x^2", "z"], &["-x^2", "0", "y"], &["-z", "-y", "0"]]);
    assert_eq!(rows_of(&v_odd(f(), 1).unwrap()), v1odd);

    let v2odd = parse_rows(&[
        &["0", "0", "0", "x^2", "z"],
        &["0", "0", "x^2", "z^2", "y"],
        &["0", "-x^2", "0", "y^2", "0"],
        &["-x^2", "-z^2", "-y^2", "0", "0"],
        &["-z", "-y", "0", "0", "0"],
    ]);
    assert_eq!(rows_of(&v_odd(f(), 2).unwrap()), v2odd);
}

#[test]
fn hankel_blocks_and_determinants() {
    assert_eq!(square_rows(&u_even(f(), 2).unwrap()), parse_rows(&[&["x^2", "z^2"], &["z^2", "y^2"]]));
    assert_eq!(square_rows(&u_odd(f(), 2).unwrap()), parse_rows(&[&["x^2", "z^2"], &["z", "y"]]));
    assert_eq!(u_even(f(), 2).unwrap().det(), p("x^2*y^2 - z^4"));
    assert_eq!(u_odd(f(), 2).unwrap().det(), p("x^2*y - z^3"));
}

#[test]
fn pfaffians_of_small_matrices() {
    let sys = sub_pfaffians(&v_even(f(), 1).unwrap()).unwrap();
    assert_eq!(sys.pf, vec![p("y^2"), p("-z^2"), p("x^2")]);
    let sys = sub_pfaffians(&v_odd(f(), 2).unwrap()).unwrap();
    assert!(sys.syzygy_residual().iter().all(Poly::is_zero));
    // x^{2m-2i} d_i for i < m, y^{2m-1}, y^{2m-2i} d_i for 1 <= i < m, and d_m, at m = 2
    let listed = GradedIdeal::parse(f(), &["x^4", "x^2*z", "y^3", "y^2*z", "x^2*y - z^3"]).unwrap();
    assert!(GradedIdeal::new(f(), sys.pf).unwrap().same_ideal(&listed));
}

#[test]
fn odd_trim_decomposition_and_lift() {
    for m in [2usize, 3] {
        let input = TrimInput::new(v_odd(f(), m).unwrap(), 2 * m).unwrap();
        let mut v0 = vec![p("-x^2"), p("-z^2"), p("-y^2")];
        v0.resize(2 * m + 1, Poly::zero(f()));
        assert_eq!(input.decompose().v0_prime, v0, "m={m}");
        assert_eq!(input.decompose().reassemble(), *input.matrix());

        let q = input.build_q();
        let zero = Poly::zero(f());
        assert_eq!(q[0], [p("-x"), zero.clone(), zero.clone()]);
        assert_eq!(q[1], [zero.clone(), zero.clone(), p("-z")]);
        assert_eq!(q[2], [zero.clone(), p("-y"), zero.clone()]);
        assert!(q[3..].iter().all(|u| u.iter().all(Poly::is_zero)));
        assert_eq!(q_constant_rank(f(), &q), 0);

        // B = x y^{2m-2} e_x∧e_y + y^{2m-3} z^2 e_y∧e_z solves ∂B = ±t
        let e = 2 * m as u32;
        let b_hand = [p(&format!("x*y^{}", e - 2)), zero.clone(), p(&format!("y^{}*z^2", e - 3))];
        let t = koszul_target(input.pfaffians(), &q);
        let db = koszul_wedge2(&b_hand);
        let neg_t: [Poly; 3] = std::array::from_fn(|k| -&t[k]);
        assert!(db == t || db == neg_t, "m={m}: ∂B = {db:?}, t = {t:?}");
        let b = build_b(input.pfaffians(), &q).unwrap();
        assert_eq!(koszul_wedge2(&b), t);

        let c = build_complex(&input).unwrap();
        assert!(c.is_minimal());
        assert_eq!(input.predicted_mu(), 2 * m + 3);
    }
}

#[test]
fn extremal_trim_decomposition_and_lift() {
    for s in [2usize, 3, 4] {
        let input = TrimInput::new(v_j(f(), s, s).unwrap(), s + 1).unwrap();
        let mut v0 = vec![Poly::zero(f()); 2 * s + 1];
        v0[s - 1] = p("-x^2");
        v0[s + 1] = p("y");
        assert_eq!(input.decompose().v0_prime, v0, "s={s}");
        let q = input.build_q();
        let zero = Poly::zero(f());
        assert_eq!(q[s - 1], [p("-x"), zero.clone(), zero.clone()]);
        assert_eq!(q[s + 1], [zero.clone(), p("1"), zero.clone()]);
        assert_eq!(q_constant_rank(f(), &q), 1);
        // B ⊗ k = 0 by degrees
        let c = build_complex(&input).unwrap();
        assert!(c.b.iter().all(|g| g.constant_term() == 0));
        assert!(!c.is_minimal());
    }
}

#[test]
fn even_hankel_trim_has_no_units() {
    for s in [4usize, 6] {
        let input = TrimInput::new(h_even(f(), s).unwrap(), 1).unwrap();
        assert_eq!(q_constant_rank(f(), &input.build_q()), 0);
        assert_eq!(input.predicted_mu(), s + 3);
    }
}
