fn main() {
    std::process::exit(meanfts::cli::run(std::env::args_os()));
}
