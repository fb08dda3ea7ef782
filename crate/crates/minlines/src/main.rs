fn main() {
    std::process::exit(minlines::cli::run());
}
