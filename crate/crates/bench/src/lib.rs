//! Fixtures shared by the benchmarks.

use mengerkit_core::forge::{generate_instance, GeneratorConfig};
use mengerkit_core::{AbstractAlgebra, ConcreteAlgebra, Flavor};

/// The first generated algebra from `seed` onward with at least `min_size`
/// elements and at most `max_size`.
pub fn instance(
    flavor: Flavor,
    base: usize,
    min_size: usize,
    max_size: usize,
    seed: u64,
) -> (ConcreteAlgebra, AbstractAlgebra) {
    (seed..seed + 10_000)
        .find_map(|s| {
            let cfg = GeneratorConfig::new(2, base, 2, s)
                .with_flavor(flavor)
                .with_closure_cap(max_size);
            generate_instance(&cfg).ok().filter(|(c, _)| c.len() >= min_size)
        })
        .expect("no instance in range")
}

/// Small, medium and large Menger instances, labelled by size.
pub fn ladder() -> Vec<(String, ConcreteAlgebra, AbstractAlgebra)> {
    [(2, 4, 6), (2, 8, 12), (3, 16, 32)]
        .into_iter()
        .map(|(base, lo, hi)| {
            let (c, a) = instance(Flavor::Menger, base, lo, hi, 0);
            (format!("m{}", a.size()), c, a)
        })
        .collect()
}
