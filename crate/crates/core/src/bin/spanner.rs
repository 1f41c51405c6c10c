fn main() {
    std::process::exit(additive_spanner::cli::run(std::env::args_os()));
}
