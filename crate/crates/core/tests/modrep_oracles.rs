mod common;

use bgawc_core::blocks::BlockSystem;
use bgawc_core::gf::divisors;
use bgawc_core::modrep::{class_count_oracle, ModularSystem};

use common::{corpus, field_for, primes_of};

#[test]
fn brauer_and_galois_counts_match_class_oracles() {
    for (name, g) in corpus() {
        for p in primes_of(g.order()) {
            let t0 = std::time::Instant::now();
            let f = field_for(&g, p);
            let blocks = BlockSystem::new(&g, &f).unwrap();
            let m = ModularSystem::new(blocks, 0, name).unwrap();
            let regular = g.p_regular_classes(p).len();
            assert_eq!(m.simples().len(), regular, "{name} p={p}");
            for d in divisors(f.degree()) {
                assert_eq!(
                    m.count_fixed_simples(d),
                    class_count_oracle(&g, p, d),
                    "{name} p={p} m={d}"
                );
            }
            eprintln!("{name} p={p}: {} simples, {:?}", m.simples().len(), t0.elapsed());
        }
    }
}
