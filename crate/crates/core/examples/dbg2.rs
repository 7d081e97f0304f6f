fn main() {
    let n = 200usize;
    let mut z = ((2 * n + 1) as f64).sqrt() - 1.85575 * ((2 * n + 1) as f64).powf(-1.0 / 6.0);
    println!("initial guess for largest root: {z}");
    for it in 0..30 {
        let mut p1 = std::f64::consts::PI.powf(-0.25);
        let mut p2 = 0.0;
        for j in 1..=n {
            let p3 = p2;
            p2 = p1;
            p1 = z * (2.0 / j as f64).sqrt() * p2 - (((j - 1) as f64) / j as f64).sqrt() * p3;
        }
        let pp = (2.0 * n as f64).sqrt() * p2;
        let dz = p1 / pp;
        println!("it {it}: z = {z:.15}, p1 = {p1:.3e}, p2 = {p2:.3e}, pp = {pp:.3e}, dz = {dz:.3e}");
        z -= dz;
        if dz.abs() <= 1e-15 * (1.0 + z.abs()) {
            println!("converged, w = {:.6e}", 2.0 / (pp * pp));
            break;
        }
    }
}
