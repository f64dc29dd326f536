// Solve 𝓕𝒳ᵀ𝓕ℬ𝒳 = 𝒞 by forward substitution over Toeplitz coefficients,
// starting from free parameters (below-diagonal blocks, base isometries, Z_j).
use isotropy::engine::model::SampleParams;
use isotropy::engine::{build_centralizer, sampling, solve_structured_congruence};
use isotropy::ShapeSpec;

fn main() -> isotropy::Result<()> {
    let spec = ShapeSpec::nilpotent(1, &[3, 2, 1], &[1, 1, 2], 1);
    let model = build_centralizer(&spec)?;
    let forms = model.forms.as_ref().expect("nilpotent spec");
    let mut g = sampling::rng(5);
    let SampleParams::Nilpotent { params } = model.sample_params(&mut g)? else {
        unreachable!()
    };
    let x = solve_structured_congruence(forms, &params)?;
    println!("𝒳 =\n{}", x.to_dense());
    println!("residual is zero: {}", forms.residual(&x).is_zero());
    Ok(())
}
