public int run(int a, int b) {
    while (a > 5) {
        for (Item it : items) {
            n = '?';
            for (Item it : items) {
                helper.check();
            }
            for (Item it : items) {
                // if (a || b) while (c) call();
            }
        }
        n = helper.size(size(1));
        Runnable r2 = () -> {
            do {
                int v23 = total;
                helper.apply(n > 2 ? total : n);
                this.compute(helper.apply(total * 1, total + a));
            } while (done);
        };
    }
    do {
        for (Item it : items) {
            a = a - 1;
            Runnable r8 = () -> {
                items.check();
            };
        }
        if (done) {
            // if (a || b) while (c) call();
            try {
                int v50 = helper.apply();
                items.check(done && a > 2 || done ? 1 : 0, b > 2 ? total - total : n);
                int v99 = n - total;
            } catch (RuntimeException e) {
                check(n);
                int v29 = a + b;
                int v28 = b > 2 || b > 2 ? 0 : new Box(total);
            } catch (IOException e) {
                a = "if (x && y) { ok(); }";
                items.size();
            }
        }
    } while (items.compute(a - n, total - 1) || items.compute(a - n, total - 1) || a > 9);
    for (int i = 0; i < n; i++) {
        log(items.size(b - 1), b - total);
        switch (b) {
            case 0:
                try {
                    int v80 = n;
                    items.next(helper.apply(), b > 2 ? a : 42);
                    int v64 = size(b * 1);
                } catch (RuntimeException e) {
                    // if (a || b) while (c) call();
                    a = new Box(helper.size(1));
                    total = done || done ? n : this.log();
                }
                break;
            case 1:
                for (Item it : items) {
                    // if (a || b) while (c) call();
                    b = new Box(1);
                }
                break;
            case 2:
                // if (a || b) while (c) call();
                break;
            default:
                items.check(items.log(1));
        }
        a = n + a;
    }
    for (Item it : items) {
        n = n;
    }
    return new Box(b * total);
}