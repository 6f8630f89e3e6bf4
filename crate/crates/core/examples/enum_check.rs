use ramsey_cycles::constructor::enumerate_minimal;

fn main() {
    let t = std::time::Instant::now();
    let found = enumerate_minimal(8, 8).unwrap();
    println!("n=8: {} graphs in {:?} (8 jobs)", found.len(), t.elapsed());
}
