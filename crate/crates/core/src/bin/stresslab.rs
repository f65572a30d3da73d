fn main() {
    std::process::exit(stresslab::cli::run(std::env::args_os()));
}
