use positivity_core::lattice::{lattice_invariants, leech};

fn main() {
    let start = std::time::Instant::now();
    let lattice = leech().expect("construction");
    let inv = lattice_invariants(&lattice);
    println!(
        "Leech: det {} min norm {} kissing {} in {:.1?}",
        inv.covolume_sq,
        inv.lambda1_sq,
        inv.kissing,
        start.elapsed()
    );
}
