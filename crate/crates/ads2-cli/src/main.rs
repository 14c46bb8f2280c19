fn main() {
    std::process::exit(ads2_cli::run(std::env::args_os()));
}
