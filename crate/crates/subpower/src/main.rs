fn main() {
    std::process::exit(subpower::cli::run());
}
