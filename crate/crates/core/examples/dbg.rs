use movebound::ode::{integrate, OdeOptions, OdeSystem};
use movebound::phi_ode::{solve_phi, PhiSpec};
use movebound::quad::GaussHermite;

struct Exponential;
impl OdeSystem for Exponential {
    fn dim(&self) -> usize {
        1
    }
    fn rhs(&self, _x: f64, u: &[f64], du: &mut [f64]) {
        du[0] = u[0];
    }
    fn rhs_jet(&self, _x: f64, _u: &[f64], du: &[f64], ddu: &mut [f64]) {
        ddu[0] = du[0];
    }
}

fn main() {
    // GH weights
    for n in [20usize, 57, 200] {
        let gh = GaussHermite::new(n);
        let total: f64 = gh.weights().iter().sum();
        println!(
            "GH n={n}: sum w = {total:.16} vs {:.16}, max_node = {}",
            std::f64::consts::PI.sqrt(),
            gh.max_node()
        );
        let bad = gh.nodes().iter().filter(|x| !x.is_finite()).count();
        println!("  non-finite nodes: {bad}");
    }

    // exp forward
    let sol = integrate(&Exponential, 0.0, &[1.0], 6.0, &OdeOptions::default()).unwrap();
    for &x in &[0.5, 2.0, 4.0, 6.0] {
        let v = sol.component(x, 0);
        println!("exp({x}) err = {:.3e}", (v - x.exp()).abs() / x.exp());
    }

    // cosh via phi
    let spec = PhiSpec::second_order(0.0, 0.0, 1.0, 0.0, 0.0, [1.0, 0.0]);
    let phi = solve_phi(&spec, (-6.0, 6.0)).unwrap();
    for &x in &[0.5, 1.0, 2.0, 4.0, 6.0, -2.0, -6.0] {
        let v = phi.value(x).unwrap();
        println!(
            "cosh({x}): got {v:.15}, want {:.15}, abs err {:.3e}",
            x.cosh(),
            (v - x.cosh()).abs()
        );
    }

    // where does the error come from: patch or dense?
    println!("phi max step used: {}", phi.max_step_used());
}
