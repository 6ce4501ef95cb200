fn main() {
    std::process::exit(superint::cli::main_with_args(std::env::args().collect()));
}
