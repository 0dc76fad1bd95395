// scratch benchmark, not part of the repo
use logderiv::field::Rationals;
use logderiv::parse::parse_polynomial;
use logderiv::poly::{QPoly, VarSet};
use logderiv::singcurve::*;
use std::time::Instant;

fn p(s: &str) -> QPoly {
    parse_polynomial(Rationals, &VarSet::xyz(), s).unwrap()
}

fn main() {
    let opts = ChartOptions::default();
    let b3 = Arrangement::new(vec![p("x"), p("y"), p("z"), p("x-y"), p("x+y"), p("x-z"), p("x+z"), p("y-z"), p("y+z")]).unwrap();
    let t = Instant::now();
    let prof = singularity_profile(&b3, 1, &opts).unwrap();
    println!("B3 profile: mu={} tau={} pts={} in {:?} (want 49,49,13)", prof.mu_total, prof.tau_total, prof.singular_point_count, t.elapsed());

    let a3 = Arrangement::new(vec![p("x"), p("y"), p("z"), p("x-y"), p("x-z"), p("y-z")]).unwrap();
    let c_a3 = p("x*y*(x-y) + 2*x*z*(x-z) + 3*y*z*(y-z)");
    let t = Instant::now();
    let u = a3.with_curve(&c_a3).unwrap();
    let prof = singularity_profile(&u, 1, &opts).unwrap();
    println!("A3uC profile: mu={} tau={} pts={} in {:?} (want 48,48,7)", prof.mu_total, prof.tau_total, prof.singular_point_count, t.elapsed());
    let t = Instant::now();
    println!("k={:?} bez={:?} in {:?} (want 7, 18)",
        reduced_point_count(&c_a3, &a3, 1, &opts).unwrap(),
        bezout_total(&c_a3, &a3, 1, &opts).unwrap(), t.elapsed());

    let c_b3 = p("x*y*(x-y)*(x+y) + 2*x*z*(x-z)*(x+z) + 3*y*z*(y-z)*(y+z)");
    let t = Instant::now();
    let ub = b3.with_curve(&c_b3).unwrap();
    let prof = singularity_profile(&ub, 1, &opts).unwrap();
    println!("B3uC profile: mu={} tau={} pts={} in {:?} (want 108,108,13)", prof.mu_total, prof.tau_total, prof.singular_point_count, t.elapsed());
    let t = Instant::now();
    println!("k={:?} bez={:?} in {:?} (want 13, 36)",
        reduced_point_count(&c_b3, &b3, 1, &opts).unwrap(),
        bezout_total(&c_b3, &b3, 1, &opts).unwrap(), t.elapsed());
}
