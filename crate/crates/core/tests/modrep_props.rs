mod common;

use wdigraph::digraph::EdgeStyle;
use wdigraph::exactalg::{Poly, RatFunc, RatMatrix};
use wdigraph::families::build_family_dihedral;
use wdigraph::modrep::{linear_char_dims, ModuleRep};
use wdigraph::validator::brute_force_check;

fn poly(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_ints(c))
}

#[test]
fn rho_times_inverse_is_identity() {
    let mut fixtures = common::family_fixtures();
    fixtures.push(("Γ_* of A3".into(), common::lv_a3_trivial()));
    fixtures.push(("Γ_# of A3".into(), common::lv_a3_twisted()));
    fixtures.push(("Ã2 cycle".into(), common::affine_cycle()));
    for (name, g) in fixtures {
        let rep = ModuleRep::new(&g).unwrap();
        let id = RatMatrix::identity(rep.dim());
        for w in g.system().enumerate(Some(4)).unwrap().elements {
            let inv = rep.rho_inverse(&w).unwrap();
            assert_eq!(&rep.rho(&w) * &inv, id, "{name}, w = {}", g.system().format(&w));
            assert_eq!(inv, rep.rho_inverse_product(&w), "{name}, w = {}", g.system().format(&w));
        }
    }
}

#[test]
fn accepted_fixtures_satisfy_the_relations() {
    for (name, g) in common::finite_fixtures() {
        assert!(brute_force_check(&g).unwrap().is_none(), "{name}");
    }
    assert!(brute_force_check(&common::affine_cycle()).unwrap().is_none());
}

#[test]
fn edge_eigenvectors() {
    let u2 = RatFunc::u_pow(2);
    let minus = RatFunc::from_int(-1);
    let solid = RatFunc::u_pow(-2);
    let dashed = &poly(&[1, 1]) * &poly(&[0, -1, 1]).inv().unwrap();
    let mut fixtures = common::finite_fixtures();
    fixtures.push(("Ã2 cycle".into(), common::affine_cycle()));
    for (name, g) in fixtures {
        let rep = ModuleRep::new(&g).unwrap();
        let n = rep.dim();
        for e in g.edges() {
            let mut plus = vec![RatFunc::zero(); n];
            plus[e.src] = RatFunc::one();
            plus[e.dst] = RatFunc::one();
            let c = if e.style == EdgeStyle::Solid { &solid } else { &dashed };
            let mut sgn = vec![RatFunc::zero(); n];
            sgn[e.src] = RatFunc::one();
            sgn[e.dst] = -c.clone();
            let image = rep.apply_gen(e.label, &plus);
            assert_eq!(image, plus.iter().map(|x| x * &u2).collect::<Vec<_>>(), "{name}");
            let image = rep.apply_gen(e.label, &sgn);
            assert_eq!(image, sgn.iter().map(|x| x * &minus).collect::<Vec<_>>(), "{name}");
        }
    }
}

#[test]
fn trace_constant_term_counts_the_sink() {
    for (name, g) in common::family_fixtures() {
        let rep = ModuleRep::new(&g).unwrap();
        let tr = (rep.tau(0) * rep.tau(1)).trace().unwrap();
        let p = tr.as_poly().expect("polynomial trace");
        assert_eq!(p.coeff(0), num::BigRational::from_integer(1.into()), "{name}: {tr}");
    }
}

#[test]
fn eigenspace_dimensions_of_unions() {
    let f7 = build_family_dihedral(7, 1, Some(3)).unwrap();
    let two = f7.disjoint_union(&f7, "x").unwrap();
    let d = linear_char_dims(&ModuleRep::new(&two).unwrap()).unwrap();
    assert_eq!((d.dim_ind, d.dim_sgn), (2, 2));
    let cycle = common::affine_cycle();
    let both = cycle.disjoint_union(&cycle, "x").unwrap();
    let d = linear_char_dims(&ModuleRep::new(&both).unwrap()).unwrap();
    assert_eq!((d.dim_ind, d.dim_sgn), (2, 0));
    assert_eq!(d.predicted_sgn, Some(0));
}

#[test]
fn sign_weights_are_eigenvectors() {
    for (name, g) in common::finite_fixtures() {
        let rep = ModuleRep::new(&g).unwrap();
        let d = linear_char_dims(&rep).unwrap();
        assert_eq!(d.sgn_weights.len(), d.dim_sgn, "{name}");
        for v in &d.sgn_weights {
            for s in 0..g.system().rank() {
                let image = rep.apply_gen(s, v);
                assert_eq!(image, v.iter().map(|x| -x.clone()).collect::<Vec<_>>(), "{name}");
            }
        }
    }
}
