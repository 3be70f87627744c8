use lattica_core::corpus::Corpus;
use lattica_core::theorems::registry;

#[test]
fn every_registered_check_holds() {
    let corpus = Corpus::standard();
    for t in registry() {
        let start = std::time::Instant::now();
        let o = t.run(&corpus);
        eprintln!("{:<22} {:>5} instances  {:?}", o.id, o.instances, start.elapsed());
        assert!(o.holds(), "{}: {}", o.id, o.failure.unwrap_or_default());
    }
}
