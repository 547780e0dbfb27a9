//! Ranking, unranking, reversing and parsing move orders.

use warnsdorff::permutations::{parse_order, rank, reverse, unrank, ORDER_COUNT};
use warnsdorff::{base_order, OrderRank};

fn main() -> Result<(), warnsdorff::Error> {
    println!("{ORDER_COUNT} orders");
    for r in [0, 1, 2, 12345, 40319] {
        let order = unrank(OrderRank::new(r)?);
        println!("{r:>5}  {order}");
    }

    let order = parse_order("<1,2> <1,-2> <-2,-1> <2,-1> <-2,1> <-1,-2> <-1,2> <2,1>")?;
    let back = reverse(&order);
    println!(
        "rank {} -> reversed {} is rank {}",
        rank(&order),
        back,
        rank(&back)
    );
    println!(
        "base reversed is the last rank: {}",
        rank(&reverse(&base_order()))
    );

    match parse_order("<1,2> <2,1> <1,3> <2,-1> <-1,2> <-2,1> <-1,-2> <-2,-1>") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
