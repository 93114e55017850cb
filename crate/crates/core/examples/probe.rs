use gspec_core::nonlinear::*;
use gspec_core::{Grid, Symbol};

fn main() {
    // bilap(0) on (160, 88): probe decay windows
    let grid = Grid::new(1, 160, 88.0).unwrap();
    let prob = NonlinearProblem::new(Symbol::bilaplacian(1, 0.0).unwrap(), 1.0, 1, grid).unwrap();
    let opts = PetviashviliOptions { tol: 1e-9, max_iters: 500 };
    let (sol, _) = multi_start(&prob, &[1, 2, 3, 4, 5], &opts).unwrap();
    for (lo, hi) in [(10.0, 37.0), (10.0, 33.0), (8.0, 30.0), (12.0, 32.0), (9.0, 34.0)] {
        match decay_fit(&sol.state, (lo, hi)) {
            Ok((rate, rms)) => println!("bilap(0) window ({lo},{hi}): rate {rate:.4} rms {rms:.3e}"),
            Err(e) => println!("bilap(0) window ({lo},{hi}): {e}"),
        }
    }
    // bilap(-4) on (240, 88)
    let grid2 = Grid::new(1, 240, 88.0).unwrap();
    let prob2 = NonlinearProblem::new(Symbol::bilaplacian(1, -4.0).unwrap(), 5.0, 1, grid2).unwrap();
    let (sol2, _) = multi_start(&prob2, &[1, 2, 3, 4, 5], &opts).unwrap();
    for (lo, hi) in [(10.6, 30.8), (8.0, 32.0), (10.0, 36.0)] {
        match decay_fit(&sol2.state, (lo, hi)) {
            Ok((rate, rms)) => println!("bilap(-4) window ({lo},{hi}): rate {rate:.4} rms {rms:.3e}"),
            Err(e) => println!("bilap(-4) window ({lo},{hi}): {e}"),
        }
    }
    // full verify on the chosen grids
    let v0 = NonlinearVerifyOptions { decay_window: Some((9.0, 33.0)), ..Default::default() };
    let rep = verify_nonlinear(&sol, &prob, &[], &v0).unwrap();
    println!("bilap(0) fails: {:?}", rep.verification.predicates.iter().filter(|p| format!("{:?}", p.verdict) == "Fail").map(|p| p.name.clone()).collect::<Vec<_>>());
    println!("  fullness {:.4} rate {:.3} rms {:.3e}", rep.omega_fullness, rep.decay_rate, rep.decay_fit_residual);
    let v4 = NonlinearVerifyOptions { decay_window: Some((10.0, 32.0)), ..Default::default() };
    let rep2 = verify_nonlinear(&sol2, &prob2, &[], &v4).unwrap();
    println!("bilap(-4) fails: {:?}", rep2.verification.predicates.iter().filter(|p| format!("{:?}", p.verdict) == "Fail").map(|p| p.name.clone()).collect::<Vec<_>>());
    println!("  fullness {:.4} rate {:.3} rms {:.3e}", rep2.omega_fullness, rep2.decay_rate, rep2.decay_fit_residual);
}
