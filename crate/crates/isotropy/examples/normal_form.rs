// Canonical H-skew (or H-Hamiltonian) matrix for a shape, and the
// factorization that carries its form to the alternating target ℬ.
use isotropy::normal_form::{bundle, ed_decomposition, psi_conjugator, target_form};
use isotropy::oracle::is_h_skew;
use isotropy::ShapeSpec;

fn main() -> isotropy::Result<()> {
    // c = 2 is the symplectic setting; α = (3, 2) forces the 2-block to pair up.
    let spec = ShapeSpec::nilpotent(2, &[3, 2], &[1, 1], 1);
    let b = bundle(&spec)?;
    println!("n = {}", b.n());
    println!("A =\n{}", b.a);
    println!("H =\n{}", b.h);
    assert!(is_h_skew(&b.a, &b.h)?);

    let (e, d) = ed_decomposition(&spec)?;
    println!("(U⁻¹)ᵀ H U⁻¹ = E·D with D =\n{d}");
    let _ = e;
    let tf = target_form(&spec)?;
    println!("target form ℬ =\n{}", tf.b);
    println!("Ψ =\n{}", psi_conjugator(&spec)?);
    Ok(())
}
