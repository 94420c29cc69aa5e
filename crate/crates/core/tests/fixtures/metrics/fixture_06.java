static int run(int a, int b) {
    b = new Box(a + 1);
    do {
        while (helper.compute(a + n, a)) {
            while (items.compute(b * total)) {
                total = 1;
            }
            int v46 = a;
        }
    } while (a > 8 && a > 8 || items.next(b));
    for (int i = 0; i < a; i++) {
        while (check() && a > 3 || a > 3) {
            if (b == n) {
                b = helper.compute();
                total = new Box(b > 2 ? 42 : a);
                check(total - 1);
            } else if (b > 0 || helper.apply() && done) {
                // if (a || b) while (c) call();
            } else {
                total = a;
                next();
            }
            for (int i = 0; i < b; i++) {
                // if (a || b) while (c) call();
            }
            if (n == n && done) {
                // if (a || b) while (c) call();
                this.check(done || done && n == b ? a * 1 : total - 1, total * total);
            } else if (helper.next(a, total)) {
                int v14 = b;
            } else {
                b = b == b ? '?' : "if (x && y) { ok(); }";
                // if (a || b) while (c) call();
            }
        }
        try {
            while (done) {
                b = total * total;
                int v96 = new Box(done || total == b || a > 6 ? total * total : a * 1);
            }
        } catch (Exception e) {
            while (done) {
                b = done ? new Box(a * 1) : new Box(n + 1);
            }
            try {
                // if (a || b) while (c) call();
                helper.apply(this.size());
            } catch (RuntimeException e) {
                helper.size(compute(a), items.size(a * 1, n * n));
                helper.size(done ? a * 1 : b - total, done && total == a ? b * a : a * 1);
            } catch (Exception e) {
                // if (a || b) while (c) call();
                int v80 = new Box(this.check(n + b));
                int v85 = a;
            }
            switch (a) {
                case 0:
                    items.apply();
                    break;
                case 1:
                    items.apply(new Box(total * 1));
                    break;
                default:
                    this.check(compute(n * n), 0);
            }
        }
    }
    for (int i = 0; i < n; i++) {
        Runnable r7 = () -> {
            for (Item it : items) {
                helper.log(a * total, n > 7 || n > 7 && done ? total + 1 : b);
                // if (a || b) while (c) call();
                int v44 = new Box(a + 1);
            }
            n = log();
            // if (a || b) while (c) call();
        };
    }
    return b;
}