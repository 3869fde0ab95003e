//! Ad-hoc performance probes, run manually with
//! `cargo test --test perf_probe -- --ignored --nocapture`.

use std::time::Instant;

use ndarray::Array2;
use shadowgen_core::qsim::{build_hamiltonian, ground_space_auto, HamiltonianSpec};

#[test]
#[ignore]
fn probe_dense_eigen_n10() {
    let spec = HamiltonianSpec::tfim(0.5, 10).unwrap();
    let h = build_hamiltonian(&spec).unwrap();
    let t = Instant::now();
    let gs = ground_space_auto(&h).unwrap();
    println!(
        "dense eigen 1024x1024: {:.2?} (E0 = {:.6}, deg = {})",
        t.elapsed(),
        gs.energy,
        gs.degeneracy()
    );
}

#[test]
#[ignore]
fn probe_gemm_throughput() {
    for (m, k, n) in [(6656usize, 128usize, 384usize), (6656, 128, 512), (6656, 512, 128)] {
        let a64 = Array2::<f64>::from_elem((m, k), 1.000_3);
        let b64 = Array2::<f64>::from_elem((k, n), 0.999_7);
        let t = Instant::now();
        let reps = 20;
        for _ in 0..reps {
            let c = a64.dot(&b64);
            std::hint::black_box(&c);
        }
        let el = t.elapsed().as_secs_f64() / reps as f64;
        let gflops = 2.0 * (m * k * n) as f64 / el / 1e9;
        println!("f64 gemm {m}x{k}x{n}: {:.1} ms, {gflops:.1} GFLOP/s", el * 1e3);

        let a32 = a64.mapv(|x| x as f32);
        let b32 = b64.mapv(|x| x as f32);
        let t = Instant::now();
        for _ in 0..reps {
            let c = a32.dot(&b32);
            std::hint::black_box(&c);
        }
        let el = t.elapsed().as_secs_f64() / reps as f64;
        let gflops = 2.0 * (m * k * n) as f64 / el / 1e9;
        println!("f32 gemm {m}x{k}x{n}: {:.1} ms, {gflops:.1} GFLOP/s", el * 1e3);
    }
}
