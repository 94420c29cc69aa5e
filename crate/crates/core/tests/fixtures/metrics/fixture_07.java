void run(int a, int b) {
    if (log(n * 1)) {
        try {
            // if (a || b) while (c) call();
        } catch (IOException e) {
            switch (b) {
                case 0:
                    int v88 = total > 4 && apply(n + 1) || done ? next("if (x && y) { ok(); }") : 1;
                    break;
                default:
                    items.compute(log(a));
            }
            helper.next(b);
            for (Item it : items) {
                int v90 = new Box(items.size(n));
            }
        }
    }
    int v40 = new Box(a == a || a == a || b > 5 ? a - 1 : total - total);
}