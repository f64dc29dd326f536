// Draw seeded centralizer elements and check them with the exact oracle,
// then show that a one-entry perturbation is caught.
use isotropy::engine::build_centralizer;
use isotropy::verify::{verify_model, VerifyOptions};
use isotropy::ShapeSpec;

fn main() -> isotropy::Result<()> {
    let model = build_centralizer(&ShapeSpec::nilpotent(1, &[2, 1], &[2, 1], 1))?;
    let opts = VerifyOptions { samples: 20, seed: 11, corrupt: false, limit: 16 };
    let report = verify_model(&model, &model.bundle, &opts)?;
    print!("{}", report.summary());

    let corrupted = verify_model(&model, &model.bundle, &VerifyOptions { corrupt: true, ..opts })?;
    print!("{}", corrupted.summary());
    assert!(report.all_pass && !corrupted.all_pass);
    Ok(())
}
