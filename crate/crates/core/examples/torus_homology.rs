//! The nerve of the n-fold power of the arrow category with two parallel
//! arrows has the homology of the n-torus.

use tracehom::fincat::theta_power;
use tracehom::homology::nerve_homology;
use tracehom::Limits;

fn main() -> tracehom::Result<()> {
    let limits = Limits::default();
    for n in 1..=3 {
        let cat = theta_power(n)?;
        let h = nerve_homology(&cat, n + 1, &limits)?;
        let groups: Vec<String> = h.groups.iter().map(ToString::to_string).collect();
        println!("Theta^{n}: {}", groups.join(", "));
    }
    Ok(())
}
