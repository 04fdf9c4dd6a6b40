//! Derived limits of constant and random diagrams, compared against the
//! cohomology of the nerve and between the full and normalized complexes.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracehom::fincat::theta_power;
use tracehom::homology::{cohomology_constant, FGAbGroup};
use tracehom::limcoh::random::random_theta_power_diagram;
use tracehom::limcoh::{constant_diagram, lim_n, normalization_agreement};
use tracehom::Limits;

fn main() -> tracehom::Result<()> {
    let limits = Limits::default();
    let t2 = Arc::new(theta_power(2)?);
    let a = FGAbGroup::cyclic(6);
    let f = constant_diagram(&t2, &a);
    for n in 0..=3 {
        let lim = lim_n(&f, n, &limits)?;
        let h = cohomology_constant(&t2, &a, n, &limits)?;
        println!("lim^{n} = {lim}   H^{n}(nerve; Z/6) = {h}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let g = random_theta_power_diagram(2, &mut rng)?;
        let report = normalization_agreement(&g, 3, &limits)?;
        let groups: Vec<String> = report.full.iter().map(ToString::to_string).collect();
        println!("random diagram on Theta^2: {}", groups.join(", "));
    }
    Ok(())
}
