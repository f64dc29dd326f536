// Unipotent generators of the centralizer. The off-diagonal ones carry
// Catalan-number coefficients.
use isotropy::engine::generators::{catalan_coefficient, Parity};
use isotropy::engine::build_centralizer;
use isotropy::oracle::{automorphism_residual, commutator_residual};
use isotropy::ShapeSpec;

fn main() -> isotropy::Result<()> {
    for parity in [Parity::Even, Parity::Odd] {
        let a: Vec<String> = (0..8).map(|n| catalan_coefficient(n, parity).to_string()).collect();
        println!("{parity:?}: {}", a.join(", "));
    }

    let model = build_centralizer(&ShapeSpec::nilpotent(2, &[4, 2], &[1, 1], 1))?;
    let gens = model.generators()?;
    println!("{} generators", gens.len());
    for (label, q) in &gens {
        let ok = automorphism_residual(q, &model.bundle.h)?.zero
            && commutator_residual(q, &model.bundle.a)?.zero;
        println!("  {label:?}: member = {ok}");
    }
    Ok(())
}
