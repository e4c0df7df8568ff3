fn main() {
    std::process::exit(quadric::cli::main());
}
