fn hermite(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = std::f64::consts::PI.powf(-0.25);
    let mut p2 = 0.0;
    for j in 1..=n {
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / j as f64).sqrt() * p2 - (((j - 1) as f64) / j as f64).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

fn main() {
    let n = 200;
    for i in 0..=20 {
        let z = 18.5 + 0.05 * i as f64;
        let (h, hp) = hermite(n, z);
        println!("z = {z:.2}: H = {h:+.4e}, H' = {hp:+.4e}");
    }
    println!("--- newton from 18.77 ---");
    let mut z = 18.77_f64;
    for it in 0..12 {
        let (h, hp) = hermite(n, z);
        let dz = h / hp;
        println!("it {it}: z = {z:.12}, dz = {dz:+.4e}");
        z -= dz;
    }
}
