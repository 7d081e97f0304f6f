use movebound::quad::GaussHermite;

fn main() {
    let gh = GaussHermite::new(200);
    let n = gh.len();
    for i in (0..=99).step_by(9) {
        println!(
            "i={i:3}  node = {:+.12e}  w = {:.6e}",
            gh.nodes()[i],
            gh.weights()[i]
        );
    }
    let s: f64 = gh.weights().iter().sum();
    println!("sum = {s:.16}");
    // check sorted/distinct
    let mut dup = 0;
    for i in 1..n {
        if (gh.nodes()[i - 1] - gh.nodes()[i]).abs() < 1e-10 {
            dup += 1;
        }
    }
    println!("near-duplicate adjacent nodes: {dup}");
}
