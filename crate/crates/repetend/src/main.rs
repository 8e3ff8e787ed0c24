fn main() {
    std::process::exit(repetend::cli::run(std::env::args_os()));
}
